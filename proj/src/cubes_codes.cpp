// cubes_codes.cpp -- hypercube slice bases, the cut-polytope designs, GF(2)
// code designs, and the bound table.

#include "galedesign/cubes_codes.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "galedesign/errors.hpp"
#include "galedesign/graphs.hpp"
#include "galedesign/polytope.hpp"
#include "galedesign/spectral.hpp"

namespace gd {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int parity(std::uint64_t word) { return std::popcount(word) & 1; }

std::uint64_t low_bit(std::uint64_t x) { return x & (~x + 1); }

// Reduced GF(2) row basis: rows have distinct pivots (their lowest set bit)
// and no row contains another row's pivot; sorted by pivot.
std::vector<std::uint64_t> gf2_reduce(const std::vector<std::uint64_t>& rows) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r : rows) {
    for (std::uint64_t b : out) {
      if (r & low_bit(b)) r ^= b;
    }
    if (!r) continue;
    const std::uint64_t p = low_bit(r);
    for (std::uint64_t& b : out) {
      if (b & p) b ^= r;
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](std::uint64_t a, std::uint64_t b) { return low_bit(a) < low_bit(b); });
  return out;
}

// One kernel basis vector per non-pivot coordinate f: bit f set, plus each
// row's pivot bit when that row has bit f.
std::vector<std::uint64_t> gf2_kernel(const std::vector<std::uint64_t>& rows, int d) {
  const std::vector<std::uint64_t> red = gf2_reduce(rows);
  std::uint64_t pivots = 0;
  for (std::uint64_t b : red) pivots |= low_bit(b);
  std::vector<std::uint64_t> kernel;
  for (int f = 0; f < d; ++f) {
    if ((pivots >> f) & 1) continue;
    std::uint64_t v = 1ULL << f;
    for (std::uint64_t b : red) {
      if ((b >> f) & 1) v |= low_bit(b);
    }
    kernel.push_back(v);
  }
  return kernel;
}

std::vector<std::uint64_t> gf2_span(const std::vector<std::uint64_t>& basis) {
  if (basis.size() > 20) {
    fail(Err::BudgetExceeded, "GF(2) span enumeration is capped at 2^20 words; the basis has " +
                                  std::to_string(basis.size()) + " rows");
  }
  std::vector<std::uint64_t> out(std::size_t(1) << basis.size(), 0);
  for (std::size_t mask = 1; mask < out.size(); ++mask) {
    out[mask] = out[mask & (mask - 1)] ^ basis[std::countr_zero(mask)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_code(const LinearCode& code) {
  if (code.length < 1 || code.length > 62) {
    fail(Err::BadInput, "code length must lie in [1, 62]; got " + std::to_string(code.length));
  }
  for (std::uint64_t row : code.check) {
    if (row >> code.length) {
      fail(Err::BadInput, "a check row uses coordinates beyond the code length");
    }
  }
}

std::vector<int> slice_last_perm(int d, int m) {
  std::vector<int> perm;
  perm.push_back(0);
  for (int i = 1; i <= d; ++i) {
    if (i != m) perm.push_back(i);
  }
  perm.push_back(m);
  return perm;
}

// Mirrors Ordering::id() for an explicit permutation, so design metadata can
// be stamped without materializing the dense cube spectrum.
std::string explicit_id(const std::vector<int>& perm) {
  std::ostringstream os;
  os << "explicit:";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) os << ",";
    os << perm[i];
  }
  return os.str();
}

// Slice chosen by the congruence class of d; ties between the two middle
// slices of odd d go to the even one.
int code_slice(int d) {
  switch (d % 4) {
    case 0: return d / 2;
    case 1: return (d - 1) / 2;
    case 2: return d / 2;
    default: return (d + 1) / 2;
  }
}

int code_exponent(int d) {
  if (d % 4 == 2) return 1;
  int b = 2 * code_slice(d);
  int t = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++t;
  }
  return t;
}

}  // namespace

int LinearCode::rank() const { return static_cast<int>(gf2_reduce(check).size()); }

std::vector<std::uint64_t> LinearCode::codewords() const {
  validate_code(*this);
  return gf2_span(gf2_kernel(check, length));
}

std::vector<std::uint64_t> LinearCode::dual() const {
  validate_code(*this);
  return gf2_span(gf2_reduce(check));
}

bool LinearCode::in_dual(std::uint64_t x) const {
  validate_code(*this);
  for (std::uint64_t b : gf2_reduce(check)) {
    if (x & low_bit(b)) x ^= b;
  }
  return x == 0;
}

CubeSlice cube_slice(int d, int i) {
  if (d < 1 || d > 62) fail(Err::BadInput, "cube dimension must lie in [1, 62]");
  if (i < 0 || i > d) fail(Err::BadInput, "slice weight must lie in [0, d]");
  if (binomial(d, i) > (1LL << 20)) {
    fail(Err::BudgetExceeded, "slice has more than 2^20 members");
  }
  CubeSlice s;
  s.d = d;
  s.i = i;
  if (i == 0) {
    s.members.push_back(0);
    return s;
  }
  const std::uint64_t limit = std::uint64_t(1) << d;
  std::uint64_t v = (std::uint64_t(1) << i) - 1;
  while (v < limit) {
    s.members.push_back(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | ((low_bit(~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return s;
}

CutVector cut_vector(int d, const std::vector<int>& S) {
  if (d < 2) fail(Err::BadInput, "cut vectors need d >= 2");
  std::vector<char> in(d, 0);
  for (int v : S) {
    if (v < 0 || v >= d) fail(Err::BadInput, "cut side contains a coordinate outside [0, d)");
    if (in[v]) fail(Err::BadInput, "cut side lists a coordinate twice");
    in[v] = 1;
  }
  CutVector c;
  c.d = d;
  c.S = S;
  std::sort(c.S.begin(), c.S.end());
  for (int j = 1; j < d; ++j) {
    for (int i = 0; i < j; ++i) c.chi.push_back(in[i] ^ in[j]);
  }
  return c;
}

Mat<Rat> slice_basis(int d, int i) {
  if (d < 1 || d > 10) fail(Err::BadInput, "slice basis is dense; supported for 1 <= d <= 10");
  if (i < 0 || i > d) fail(Err::BadInput, "slice weight must lie in [0, d]");
  const CubeSlice s = cube_slice(d, i);
  Mat<Rat> u(static_cast<int>(s.members.size()), 1 << d);
  for (int r = 0; r < u.rows; ++r) {
    for (int y = 0; y < u.cols; ++y) {
      u(r, y) = parity(s.members[r] & std::uint64_t(y)) ? -1 : 1;
    }
  }
  return u;
}

CubeCensus cube_polytope_census(int d, int i) {
  if (d < 2 || d > 10) fail(Err::BadInput, "the polytope census supports 2 <= d <= 10");
  if (i < 1 || i > d - 1) {
    fail(Err::BadInput, "the census needs an interior slice, 1 <= i <= d-1");
  }
  const Mat<Rat> u = slice_basis(d, i);
  CubeCensus c;
  c.d = d;
  c.i = i;
  c.dim = u.rows;
  c.labels = 1LL << d;
  const int n = 1 << d;
  const int flip = n - 1;

  bool pairing = true;
  for (int y = 0; y < n && pairing; ++y) {
    for (int r = 0; r < u.rows; ++r) {
      const Rat expected = (i % 2 == 0) ? u(r, y) : -u(r, y);
      if (u(r, flip ^ y) != expected) {
        pairing = false;
        break;
      }
    }
  }
  if (!pairing) throw std::logic_error("slice basis violates the column pairing identity");
  c.doubled = (i % 2 == 0);
  c.centrally_symmetric = (i % 2 == 1);

  std::unordered_set<std::string> keys;
  for (int y = 0; y < n; ++y) {
    std::string key(u.rows, '+');
    for (int r = 0; r < u.rows; ++r) {
      if (u(r, y) < 0) key[r] = '-';
    }
    keys.insert(std::move(key));
  }
  c.distinct = static_cast<long long>(keys.size());
  const long long expected_distinct = c.doubled ? (1LL << (d - 1)) : (1LL << d);
  if (c.distinct != expected_distinct) {
    throw std::logic_error("slice polytope has unexpected coincidences among its columns");
  }

  if (d <= 8) {
    Mat<Rat> conf(u.rows + 1, u.cols);
    for (int y = 0; y < n; ++y) conf(0, y) = 1;
    for (int r = 0; r < u.rows; ++r) {
      for (int y = 0; y < n; ++y) conf(r + 1, y) = u(r, y);
    }
    const VectorConfiguration vc = configuration_from_matrix(conf);
    if (vc.n_classes() != c.distinct || vc.dim != u.rows + 1) {
      throw std::logic_error("census disagrees with the generic configuration builder");
    }
    const std::size_t class_size = c.doubled ? 2 : 1;
    for (const std::vector<int>& cls : vc.classes) {
      if (cls.size() != class_size) {
        throw std::logic_error("census disagrees with the generic configuration builder on class sizes");
      }
    }
  }
  return c;
}

std::vector<Design> cut_polytope_designs(int d) {
  if (d < 3) fail(Err::BadInput, "cut designs need d >= 3");
  if (d > 10) fail(Err::BadInput, "cut designs are generated with verification up to d = 10");
  const int n = 1 << d;
  const std::vector<int> perm = slice_last_perm(d, 2);
  const std::string oid = explicit_id(perm);
  const int size = n / 4;

  std::vector<Design> out;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      for (int c = b + 1; c < d; ++c) {
        for (int pat = 0; pat < 4; ++pat) {
          Design dz;
          dz.n = n;
          dz.k = d;
          dz.ordering_id = oid;
          dz.kind = DesignKind::Combinatorial;
          dz.exact = true;
          for (int y = 0; y < n; ++y) {
            const int ba = (y >> a) & 1, bb = (y >> b) & 1, bc = (y >> c) & 1;
            const bool in = pat == 0   ? (ba == bb && bb == bc)
                            : pat == 1 ? (ba == bb && bb != bc)
                            : pat == 2 ? (ba == bc && ba != bb)
                                       : (bb == bc && ba != bb);
            if (in) dz.support.push_back(y);
          }
          if (static_cast<int>(dz.support.size()) != size) {
            throw std::logic_error("a triangle condition did not cut out a quarter of the cube");
          }
          dz.weights_exact.assign(dz.support.size(), Rat(1, size));
          dz.weights.assign(dz.support.size(), 1.0 / size);

          // Exact character sums: phi_x must sum to +-|W| on the dual words
          // of the pattern subgroup and to 0 everywhere else.
          const std::uint64_t eab = (1ULL << a) | (1ULL << b);
          const std::uint64_t eac = (1ULL << a) | (1ULL << c);
          const std::uint64_t ebc = (1ULL << b) | (1ULL << c);
          for (std::uint64_t x = 0; x < std::uint64_t(n); ++x) {
            long long sum = 0;
            for (int w : dz.support) sum += parity(x & std::uint64_t(w)) ? -1 : 1;
            const bool in_perp = x == 0 || x == eab || x == eac || x == ebc;
            const bool ok = in_perp ? (sum == size || sum == -size) : (sum == 0);
            if (!ok) throw std::logic_error("cut design failed its character-sum verification");
          }
          out.push_back(std::move(dz));
        }
      }
    }
  }

  if (d <= 6) {
    const Spectrum s = analytic_spectrum(hypercube(d));
    const Ordering o = custom_order(s, perm);
    if (o.id() != oid) throw std::logic_error("ordering id mismatch in the cut design route");
    for (const Design& dz : out) {
      const VerifyReport rep = verify_design(dz, s, o, 1e-8);
      if (!rep.pass || !rep.exact) {
        throw std::logic_error("cut design failed averaging verification: " + rep.message);
      }
    }
  }
  return out;
}

TriangleFacetReport triangle_facet_check(int d) {
  if (d < 3 || d > 5) {
    fail(Err::BadInput, "the triangle facet check enumerates facets; supported for 3 <= d <= 5");
  }
  TriangleFacetReport rep;
  rep.d = d;
  const int n = 1 << d;
  const Mat<Rat> u2 = slice_basis(d, 2);

  rep.cut_match = true;
  for (int y = 0; y < n && rep.cut_match; ++y) {
    std::vector<int> side;
    for (int j = 0; j < d; ++j) {
      if ((y >> j) & 1) side.push_back(j);
    }
    const CutVector cv = cut_vector(d, side);
    for (int r = 0; r < u2.rows; ++r) {
      if ((1 - u2(r, y)) / 2 != cv.chi[r]) {
        rep.cut_match = false;
        break;
      }
    }
  }

  Mat<Rat> conf(u2.rows + 1, n);
  for (int y = 0; y < n; ++y) conf(0, y) = 1;
  for (int r = 0; r < u2.rows; ++r) {
    for (int y = 0; y < n; ++y) conf(r + 1, y) = u2(r, y);
  }
  const VectorConfiguration c = configuration_from_matrix(conf);
  const std::vector<Facet> facets = enumerate_facets(c);
  const std::vector<Facet> maxf = max_vertex_facets(c, facets);

  rep.facet_count = static_cast<long long>(facets.size());
  rep.triangle_facets = static_cast<long long>(maxf.size());
  rep.expected_triangles = 4 * binomial(d, 3);
  rep.classes_per_triangle = 3LL << (d - 3);

  rep.max_are_triangles = rep.triangle_facets == rep.expected_triangles;
  for (const Facet& f : maxf) {
    if (static_cast<long long>(f.incident_classes.size()) != rep.classes_per_triangle ||
        static_cast<long long>(f.incident.size()) != 2 * rep.classes_per_triangle) {
      rep.max_are_triangles = false;
    }
  }

  std::set<std::vector<int>> facet_supports;
  for (const Facet& f : maxf) {
    std::vector<char> inc(n, 0);
    for (int lbl : f.incident) inc[lbl] = 1;
    std::vector<int> support;
    for (int y = 0; y < n; ++y) {
      if (!inc[y]) support.push_back(y);
    }
    facet_supports.insert(std::move(support));
  }
  std::set<std::vector<int>> cut_supports;
  for (const Design& dz : cut_polytope_designs(d)) cut_supports.insert(dz.support);
  rep.supports_match_cut_designs = facet_supports == cut_supports;

  rep.pass = rep.cut_match && rep.max_are_triangles && rep.supports_match_cut_designs;
  return rep;
}

LinearCode hamming_check(int r) {
  if (r < 1 || r > 6) {
    fail(Err::BadInput, "hamming check matrices are packed into 64-bit words; need 1 <= r <= 6");
  }
  const int len = (1 << r) - 1;
  LinearCode code;
  code.length = len;
  for (int i = 0; i < r; ++i) {
    std::uint64_t row = 0;
    for (int j = 1; j <= len; ++j) {
      if ((j >> i) & 1) row |= std::uint64_t(1) << (j - 1);
    }
    code.check.push_back(row);
  }
  return code;
}

ConstantWeightCheck constant_weight_check(int d, int target_weight) {
  if (d < 1 || d > 62) fail(Err::BadInput, "code length must lie in [1, 62]");
  if (target_weight < 1 || target_weight > d) {
    fail(Err::BadInput, "target weight must lie in [1, d]");
  }
  int b = 2 * target_weight;
  int t = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++t;
  }
  const long long width = static_cast<long long>(b) * ((1LL << t) - 1);  // = 2w - b
  if (width > d) {
    fail(Err::NoSuchCode,
         "no constant-weight-" + std::to_string(target_weight) + " check matrix fits in " +
             std::to_string(d) + " columns: 2w = 2^" + std::to_string(t) + " * " +
             std::to_string(b) + " needs " + std::to_string(width) + " columns");
  }

  const LinearCode block = hamming_check(t);
  LinearCode code;
  code.length = d;
  code.check.assign(t, 0);
  for (int copy = 0; copy < b; ++copy) {
    for (int i = 0; i < t; ++i) {
      code.check[i] |= block.check[i] << (copy * ((1 << t) - 1));
    }
  }

  for (int mask = 1; mask < (1 << t); ++mask) {
    std::uint64_t word = 0;
    for (int i = 0; i < t; ++i) {
      if ((mask >> i) & 1) word ^= code.check[i];
    }
    if (std::popcount(word) != target_weight) {
      throw std::logic_error("constant-weight construction produced a wrong-weight dual word");
    }
  }
  return {code, t, target_weight};
}

CodeDesign code_design(int d) {
  if (d < 2) fail(Err::BadInput, "code designs start at d = 2");
  if (d > 16) fail(Err::BadInput, "code design generation is capped at d = 16 (2^d vertices)");
  CodeDesign out;
  out.d = d;
  out.m = code_slice(d);
  if (d % 4 == 2) {
    out.code.length = d;
    out.code.check = {(std::uint64_t(1) << (d / 2)) - 1};
    out.t = 1;
  } else {
    const ConstantWeightCheck cw = constant_weight_check(d, out.m);
    out.code = cw.code;
    out.t = cw.t;
  }

  for (std::uint64_t w : out.code.dual()) {
    if (w != 0 && std::popcount(w) != out.m) {
      throw std::logic_error("the code's dual contains a word outside the target slice");
    }
  }

  const std::vector<std::uint64_t> words = out.code.codewords();
  if (static_cast<long long>(words.size()) != (1LL << (d - out.t))) {
    throw std::logic_error("the code does not have 2^(d-t) words");
  }

  Design& dz = out.design;
  dz.n = 1 << d;
  dz.k = d;
  dz.kind = DesignKind::Combinatorial;
  dz.exact = true;
  dz.ordering_id = explicit_id(slice_last_perm(d, out.m));
  const int size = static_cast<int>(words.size());
  for (std::uint64_t w : words) dz.support.push_back(static_cast<int>(w));
  dz.weights_exact.assign(words.size(), Rat(1, size));
  dz.weights.assign(words.size(), 1.0 / size);

  if (d <= 12) {
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << d); ++x) code_averages(out.code, x);
  }
  if (d <= 10) {
    const Spectrum s = analytic_spectrum(hypercube(d));
    const Ordering o = custom_order(s, slice_last_perm(d, out.m));
    if (o.id() != dz.ordering_id) throw std::logic_error("ordering id mismatch in the code design route");
    const VerifyReport rep = verify_design(dz, s, o, 1e-8);
    if (!rep.pass || !rep.exact) {
      throw std::logic_error("code design failed averaging verification: " + rep.message);
    }
  }
  return out;
}

bool code_averages(const LinearCode& code, std::uint64_t x) {
  validate_code(code);
  if (x >> code.length) fail(Err::BadInput, "the word has bits beyond the code length");
  const bool lemma = (x == 0) || !code.in_dual(x);
  if (code.length <= 12) {
    long long sum = 0;
    for (std::uint64_t w : code.codewords()) sum += parity(x & w) ? -1 : 1;
    const bool direct = (x == 0) ? true : (sum == 0);
    if (direct != lemma) {
      throw std::logic_error("code averaging lemma disagrees with direct summation");
    }
  }
  return lemma;
}

Table1Row table1(int d) {
  if (d < 2 || d > 40) fail(Err::BadInput, "table rows are supported for 2 <= d <= 40");
  Table1Row r;
  r.d = d;
  r.m = code_slice(d);
  r.dim = binomial(d, r.m);
  r.doubled = (r.m % 2 == 0);
  r.distinct = r.doubled ? (1LL << (d - 1)) : (1LL << d);
  r.bound = 1LL << (d - code_exponent(d));
  r.facet_lower = (1LL << d) - r.bound;
  return r;
}

std::string table1_text(int d_min, int d_max) {
  if (d_min < 2 || d_max < d_min || d_max > 40) {
    fail(Err::BadInput, "table range must satisfy 2 <= d_min <= d_max <= 40");
  }
  const std::vector<std::string> header = {"d", "m", "dim P_m", "#V(P_m)", "|W*| <=", "#V(F*) >="};
  std::vector<std::vector<std::string>> cells;
  for (int d = d_min; d <= d_max; ++d) {
    const Table1Row r = table1(d);
    std::vector<std::string> row;
    row.push_back(std::to_string(r.d));
    row.push_back(std::to_string(r.m));
    row.push_back(std::to_string(r.dim));
    row.push_back(r.doubled ? std::to_string(r.distinct) + "x2" : std::to_string(r.distinct));
    row.push_back(std::to_string(r.bound));
    row.push_back(std::to_string(r.facet_lower));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << "\n";
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return os.str();
}

long long cube_upper_bounds(int d) {
  if (d < 2 || d > 40) fail(Err::BadInput, "the congruence bound is supported for 2 <= d <= 40");
  const long long total = 1LL << d;
  switch (d % 4) {
    case 0: return total - 2 * binomial(d, d / 2);
    case 1: return total - 2 * binomial(d, (d - 1) / 2);
    case 2: return total - binomial(d, d / 2);
    default: return total - 2 * binomial(d, (d + 1) / 2);
  }
}

}  // namespace gd
