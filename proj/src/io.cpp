#include "cloops/io.hpp"

#include <fstream>
#include <sstream>

#include "cloops/error.hpp"

namespace cloops {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write " + path.string());
  return out;
}

int read_int(std::istream& in, const char* what) {
  int v;
  if (!(in >> v)) fail(Err::ParseError, std::string("expected integer for ") + what);
  return v;
}

std::vector<std::vector<int>> read_matrix(std::istream& in, int rows, int cols, const char* what) {
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = read_int(in, what);
  return m;
}

}  // namespace

LoopTable read_loop(std::istream& in) {
  const int n = read_int(in, "table order");
  if (n < 1) fail(Err::ParseError, "table order must be >= 1");
  return LoopTable::from_rows(read_matrix(in, n, n, "table entry"));
}

LoopTable read_loop_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_loop(in);
}

void write_loop(std::ostream& out, const LoopTable& l) {
  out << l.size() << '\n';
  for (int i = 0; i < l.size(); ++i) {
    for (int j = 0; j < l.size(); ++j) {
      if (j) out << ' ';
      out << l.mul(i, j);
    }
    out << '\n';
  }
}

void write_loop_file(const std::filesystem::path& path, const LoopTable& l) {
  auto out = open_out(path);
  write_loop(out, l);
}

FactorSet read_cfs(std::istream& in, const std::filesystem::path& base_dir) {
  std::string tag;
  if (!(in >> tag) || tag != "K:") fail(Err::ParseError, "expected 'K:' line");
  std::vector<int> factors;
  {
    std::string rest;
    std::getline(in, rest);
    std::istringstream fs(rest);
    int v;
    while (fs >> v) factors.push_back(v);
  }
  if (factors.empty()) fail(Err::ParseError, "K: needs at least one cyclic factor");
  AbelianGroup k(factors);

  if (!(in >> tag) || tag != "Q:") fail(Err::ParseError, "expected 'Q:' line");
  std::string qspec;
  if (!(in >> qspec)) fail(Err::ParseError, "Q: needs an order or a path");
  if (qspec == "inline" && !(in >> qspec)) fail(Err::ParseError, "Q: inline needs an order");
  LoopTable q = [&] {
    try {
      const int n = std::stoi(qspec);
      return LoopTable::from_rows(read_matrix(in, n, n, "Q table entry"));
    } catch (const std::invalid_argument&) {
      std::filesystem::path p(qspec);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      return read_loop_file(p);
    }
  }();

  if (!(in >> tag) || tag != "theta:") fail(Err::ParseError, "expected 'theta:' section");
  ThetaMap theta(q.size());
  for (int x = 0; x < q.size(); ++x) {
    Perm p(k.order());
    for (int i = 0; i < k.order(); ++i) p[i] = read_int(in, "theta image");
    theta[x] = std::move(p);
  }

  if (!(in >> tag) || tag != "f:") fail(Err::ParseError, "expected 'f:' section");
  std::vector<int> f;
  f.reserve(static_cast<size_t>(q.size()) * q.size());
  for (int i = 0; i < q.size() * q.size(); ++i) f.push_back(read_int(in, "f entry"));
  return FactorSet{std::move(k), std::move(q), std::move(theta), std::move(f)};
}

FactorSet read_cfs_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_cfs(in, path.parent_path());
}

void write_cfs(std::ostream& out, const FactorSet& fs) {
  out << "K:";
  for (int f : fs.k.factors()) out << ' ' << f;
  out << '\n';
  out << "Q: " << fs.q.size() << '\n';
  for (int i = 0; i < fs.q.size(); ++i) {
    for (int j = 0; j < fs.q.size(); ++j) {
      if (j) out << ' ';
      out << fs.q.mul(i, j);
    }
    out << '\n';
  }
  out << "theta:\n";
  for (const Perm& p : fs.theta) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << p[i];
    }
    out << '\n';
  }
  out << "f:\n";
  for (int x = 0; x < fs.q.size(); ++x) {
    for (int y = 0; y < fs.q.size(); ++y) {
      if (y) out << ' ';
      out << fs.f_at(x, y);
    }
    out << '\n';
  }
}

void write_cfs_file(const std::filesystem::path& path, const FactorSet& fs) {
  auto out = open_out(path);
  write_cfs(out, fs);
}

SteinerTripleSystem read_sts(std::istream& in) {
  const int v = read_int(in, "point count");
  std::vector<std::array<int, 3>> triples;
  int a;
  while (in >> a) {
    std::array<int, 3> t{a, 0, 0};
    t[1] = read_int(in, "triple point");
    t[2] = read_int(in, "triple point");
    triples.push_back(t);
  }
  return validate_sts(v, std::move(triples));
}

SteinerTripleSystem read_sts_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_sts(in);
}

void write_sts(std::ostream& out, const SteinerTripleSystem& sts) {
  out << sts.v << '\n';
  for (const auto& t : sts.triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_sts_file(const std::filesystem::path& path, const SteinerTripleSystem& sts) {
  auto out = open_out(path);
  write_sts(out, sts);
}

}  // namespace cloops
