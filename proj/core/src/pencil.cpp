#include <biham/errors.hpp>
#include <biham/pencil.hpp>
#include <biham/smith.hpp>

#include <algorithm>
#include <map>

namespace biham {

SkewPencil::SkewPencil(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.square() || a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw Error(ErrorKind::DimensionMismatch, "pencil matrices must be square of equal size");
  if (!a_.is_skew() || !b_.is_skew()) throw Error(ErrorKind::Validation, "pencil matrices must be skew-symmetric");
}

SkewPencil SkewPencil::congruent(const Matrix& p) const {
  Matrix pt = p.transpose();
  return SkewPencil(pt * a_ * p, pt * b_ * p);
}

SkewPencil direct_sum(const SkewPencil& x, const SkewPencil& y) {
  return SkewPencil(direct_sum(x.a(), y.a()), direct_sum(x.b(), y.b()));
}

BinaryForm::BinaryForm(std::vector<Rational> coeffs, bool certified) : c_(std::move(coeffs)), certified_(certified) {
  auto last = std::find_if(c_.rbegin(), c_.rend(), [](const Rational& c) { return c != 0; });
  if (last == c_.rend()) throw Error(ErrorKind::Validation, "zero binary form");
  const Rational top = *last;
  for (auto& c : c_) c /= top;
}

BinaryForm BinaryForm::from_affine(const UPoly& q, bool certified) { return BinaryForm(q.coeffs(), certified); }

std::optional<MuLabel> BinaryForm::mu() const {
  if (degree() != 1) return std::nullopt;
  // c0*l2 + c1*l1 vanishes where mu = -l2/l1 = c1/c0.
  if (c_[0] == 0) return MuLabel{true, 0};
  return MuLabel{false, c_[1] / c_[0]};
}

BinaryForm BinaryForm::swapped() const {
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return BinaryForm(std::move(r), certified_);
}

std::string BinaryForm::to_string() const {
  std::string out;
  const int d = degree();
  for (int i = d; i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    auto factor = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor("l1", i);
    factor("l2", d - i);
    if (mono.empty()) out += a.get_str();
    else out += (a == 1 ? "" : a.get_str() + "*") + mono;
  }
  return out;
}

bool BinaryForm::operator<(const BinaryForm& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return c_ < o.c_;
}

std::size_t Block::dimension() const {
  if (kind == BlockKind::Kronecker) return static_cast<std::size_t>(2 * k - 1);
  return static_cast<std::size_t>(2 * k * divisor.degree());
}

std::string Block::to_string() const {
  if (kind == BlockKind::Kronecker) return "K" + std::to_string(dimension());
  std::string s = "J" + std::to_string(dimension());
  if (auto m = divisor.mu()) return s + "(mu=" + m->to_string() + ")";
  return s + "[" + divisor.to_string() + "]";
}

bool Block::operator==(const Block& o) const {
  if (kind != o.kind || k != o.k) return false;
  return kind == BlockKind::Kronecker || divisor == o.divisor;
}

std::size_t PencilType::kronecker_count() const {
  return static_cast<std::size_t>(std::count_if(blocks.begin(), blocks.end(),
                                                [](const Block& b) { return b.kind == BlockKind::Kronecker; }));
}

bool PencilType::has_jordan() const { return kronecker_count() != blocks.size(); }

std::vector<int> PencilType::kronecker_dims() const {
  std::vector<int> d;
  for (const auto& b : blocks)
    if (b.kind == BlockKind::Kronecker) d.push_back(2 * b.k - 1);
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::string PencilType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? ", " : "") + blocks[i].to_string();
  return s + "}";
}

void canonicalize(PencilType& t) {
  std::sort(t.blocks.begin(), t.blocks.end(), [](const Block& x, const Block& y) {
    if (x.kind != y.kind) return x.kind == BlockKind::Kronecker;
    if (x.k != y.k) return x.k > y.k;
    if (x.kind == BlockKind::Jordan) return x.divisor < y.divisor;
    return false;
  });
}

std::vector<std::size_t> corank_profile(const SkewPencil& p) {
  std::vector<std::size_t> out;
  const std::size_t n = p.n();
  for (std::size_t l = 0; l <= n; ++l) out.push_back(n - mat_rank(p.at(Rational(static_cast<long>(l)))));
  out.push_back(n - mat_rank(p.a()));
  return out;
}

std::size_t generic_corank(const SkewPencil& p) {
  auto prof = corank_profile(p);
  return *std::min_element(prof.begin(), prof.end());
}

namespace {

// Coefficients of lambda^j in (lambda*A + B) * sum_i w_i lambda^i for degree d.
Matrix convolution(const SkewPencil& p, std::size_t d) {
  const std::size_t n = p.n();
  Matrix t((d + 2) * n, (d + 1) * n);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        t(i * n + r, i * n + c) = p.b()(r, c);
        t((i + 1) * n + r, i * n + c) = p.a()(r, c);
      }
  return t;
}

std::size_t nullity(const Matrix& m) { return m.cols() - mat_rank(m); }

std::size_t valuation(UPoly s, const UPoly& q) {
  std::size_t e = 0;
  while (!s.is_zero() && s.degree() >= q.degree()) {
    auto [quo, rem] = divmod(s, q);
    if (!rem.is_zero()) break;
    s = std::move(quo);
    ++e;
  }
  return e;
}

// Pairwise coprime squarefree monic polynomials whose products generate every input.
std::vector<UPoly> coprime_base(const std::vector<UPoly>& inputs) {
  std::vector<UPoly> base;
  auto add = [&](const UPoly& q) {
    if (q.degree() <= 0) return;
    UPoly m = q.monic();
    if (std::find(base.begin(), base.end(), m) == base.end()) base.push_back(m);
  };
  for (const auto& f : inputs) add(squarefree_part(f));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < base.size() && !changed; ++a)
      for (std::size_t b = a + 1; b < base.size() && !changed; ++b) {
        UPoly g = gcd(base[a], base[b]);
        if (g.degree() <= 0) continue;
        UPoly x = exact_quotient(base[a], g), y = exact_quotient(base[b], g);
        base.erase(base.begin() + static_cast<long>(b));
        base.erase(base.begin() + static_cast<long>(a));
        add(g);
        add(x);
        add(y);
        changed = true;
      }
  }
  // Split off rational roots.
  std::vector<UPoly> split;
  for (const auto& q : base) {
    UPoly rest = q;
    for (const auto& r : rational_roots(q)) {
      UPoly lin(std::vector<Rational>{-r, 1});
      split.push_back(lin);
      rest = exact_quotient(rest, lin);
    }
    if (rest.degree() > 0) split.push_back(rest.monic());
  }
  return split;
}

void pair_divisors(const std::vector<std::size_t>& exponents, const BinaryForm& divisor, std::vector<Block>& out) {
  std::map<std::size_t, std::size_t> counts;
  for (auto e : exponents)
    if (e > 0) ++counts[e];
  for (const auto& [e, c] : counts) {
    if (c % 2 != 0)
      throw Error(ErrorKind::NotSkewCanonical, "elementary divisor (" + divisor.to_string() + ")^" + std::to_string(e) +
                                                   " has odd multiplicity " + std::to_string(c));
    for (std::size_t i = 0; i < c / 2; ++i) out.push_back(Block{BlockKind::Jordan, static_cast<int>(e), divisor});
  }
}

}  // namespace

std::vector<int> minimal_indices(const SkewPencil& p) {
  const std::size_t n = p.n(), r = generic_corank(p);
  std::vector<int> indices;
  if (r == 0) return indices;
  std::vector<long> nu;
  auto get = [&](long i) { return i >= 0 ? nu[static_cast<std::size_t>(i)] : 0L; };
  for (std::size_t d = 0; d <= n; ++d) {
    nu.push_back(static_cast<long>(nullity(convolution(p, d))));
    long e = static_cast<long>(d);
    long count = (get(e) - get(e - 1)) - (get(e - 1) - get(e - 2));
    for (long i = 0; i < count; ++i) indices.push_back(static_cast<int>(d));
    if (get(e) - get(e - 1) == static_cast<long>(r)) break;
  }
  return indices;
}

std::vector<Block> jordan_part(const SkewPencil& p) {
  std::vector<Block> blocks;
  std::vector<UPoly> finite = smith_invariant_factors(linear_pencil(p.a(), p.b()));
  for (const auto& q : coprime_base(finite)) {
    std::vector<std::size_t> exps;
    for (const auto& s : finite) exps.push_back(valuation(s, q));
    bool certified = q.degree() <= 3;
    pair_divisors(exps, BinaryForm::from_affine(q, certified), blocks);
  }
  // Divisor l2 is invisible after setting l2 = 1; read it from A + t*B at t = 0.
  std::vector<UPoly> reversed = smith_invariant_factors(linear_pencil(p.b(), p.a()));
  std::vector<std::size_t> exps;
  for (const auto& s : reversed) exps.push_back(valuation(s, UPoly::x()));
  pair_divisors(exps, BinaryForm::l2(), blocks);
  return blocks;
}

PencilType decompose(const SkewPencil& p) {
  PencilType t;
  t.n = p.n();
  for (int e : minimal_indices(p)) t.blocks.push_back(Block{BlockKind::Kronecker, e + 1, {}});
  for (auto& b : jordan_part(p)) t.blocks.push_back(std::move(b));
  canonicalize(t);
  std::size_t total = 0;
  for (const auto& b : t.blocks) total += b.dimension();
  if (total != t.n)
    throw Error(ErrorKind::InternalInconsistency,
                "block dimensions sum to " + std::to_string(total) + " for n = " + std::to_string(t.n));
  if (t.kronecker_count() != generic_corank(p))
    throw Error(ErrorKind::InternalInconsistency, "Kronecker block count differs from generic corank");
  return t;
}

KernelFamily minimal_kernel_basis(const SkewPencil& p) {
  const std::size_t n = p.n(), r = generic_corank(p);
  KernelFamily basis;
  std::vector<std::size_t> degrees;
  for (std::size_t d = 0; d <= n && basis.size() < r; ++d) {
    const std::size_t width = (d + 1) * n;
    std::vector<std::vector<Rational>> span;
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t shift = 0; shift + degrees[b] <= d; ++shift) {
        std::vector<Rational> v(width);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t e = 0; e <= degrees[b]; ++e) v[(shift + e) * n + i] = basis[b][i].coeff(e);
        span.push_back(std::move(v));
      }
    auto rank_of = [&](const std::vector<std::vector<Rational>>& rows) {
      if (rows.empty()) return std::size_t{0};
      std::vector<Rational> flat;
      for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
      return mat_rank(Matrix(rows.size(), width, std::move(flat)));
    };
    std::size_t current = rank_of(span);
    for (auto& v : mat_nullspace(convolution(p, d))) {
      span.push_back(v);
      std::size_t next = rank_of(span);
      if (next == current) {
        span.pop_back();
        continue;
      }
      current = next;
      std::vector<UPoly> w(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> c(d + 1);
        for (std::size_t e = 0; e <= d; ++e) c[e] = v[e * n + i];
        w[i] = UPoly(std::move(c));
      }
      basis.push_back(std::move(w));
      degrees.push_back(d);
    }
  }
  // Exact identity check of (lambda*A + B) w = 0.
  for (const auto& w : basis)
    for (std::size_t i = 0; i < n; ++i) {
      UPoly acc;
      for (std::size_t j = 0; j < n; ++j) acc += UPoly(std::vector<Rational>{p.b()(i, j), p.a()(i, j)}) * w[j];
      if (!acc.is_zero()) throw Error(ErrorKind::InternalInconsistency, "kernel vector fails the pencil identity");
    }
  return basis;
}

KernelFamily kernel_family(const SkewPencil& p) {
  if (!jordan_part(p).empty()) throw Error(ErrorKind::NotPureKronecker, "pencil has Jordan blocks");
  return minimal_kernel_basis(p);
}

std::size_t action_dimension(const PencilType& t) {
  const std::size_t s = t.n + t.kronecker_count();
  if (s % 2 != 0) throw Error(ErrorKind::InternalInconsistency, "dimension plus Kronecker count is odd");
  return s / 2;
}

}  // namespace biham
