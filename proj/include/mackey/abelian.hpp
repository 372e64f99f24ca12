#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/smith.hpp"

namespace mackey {

/// Largest divisor of |d| sharing no prime with n.
inline Int part_coprime_to(Int d, const Int& n) {
  d = abs(d);
  if (d == 0) return 0;
  for (Int g = gcd(d, n); g > 1; g = gcd(d, n)) d /= g;
  return d;
}

/// Coefficient ring for values: Z, Z_(p), Q or Z[1/2].
struct CoefficientMode {
  enum class Kind { Integral, PLocal, Rational, InvertTwo };

  Kind kind = Kind::Integral;
  unsigned prime = 0;

  static CoefficientMode integral() { return {}; }
  static CoefficientMode p_local(unsigned p) { return {Kind::PLocal, p}; }
  static CoefficientMode rational() { return {Kind::Rational, 0}; }
  static CoefficientMode invert_two() { return {Kind::InvertTwo, 0}; }

  /// The non-unit part of a nonzero integer d in this ring.
  Int modulus(const Int& d) const {
    switch (kind) {
      case Kind::Integral: return abs(d);
      case Kind::PLocal: return abs(d) / part_coprime_to(d, Int(prime));
      case Kind::Rational: return 1;
      case Kind::InvertTwo: return part_coprime_to(d, Int(2));
    }
    return abs(d);
  }

  bool is_unit(const Int& d) const { return d != 0 && modulus(d) == 1; }

  std::string str() const {
    switch (kind) {
      case Kind::Integral: return "Z";
      case Kind::PLocal: return "Zp:" + std::to_string(prime);
      case Kind::Rational: return "Q";
      case Kind::InvertTwo: return "Z-half";
    }
    return "Z";
  }

  static CoefficientMode parse(const std::string& s) {
    if (s == "Z") return integral();
    if (s == "Q") return rational();
    if (s == "Z-half" || s == "Z[1/2]") return invert_two();
    if (s.rfind("Zp:", 0) == 0) {
      unsigned p = 0;
      try {
        p = static_cast<unsigned>(std::stoul(s.substr(3)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InputError, "bad coefficient mode '" + s + "'");
      }
      bool prime = p >= 2;
      for (unsigned q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
      if (!prime) throw Error(ErrorCode::InputError, "Zp:<p> needs a prime, got '" + s + "'");
      return p_local(p);
    }
    throw Error(ErrorCode::InputError, "unknown coefficient mode '" + s + "'");
  }

  friend bool operator==(const CoefficientMode& a, const CoefficientMode& b) {
    return a.kind == b.kind && a.prime == b.prime;
  }
};

/// Z^n modulo the row span of a relation matrix, read over a coefficient ring.
/// Elements are integer vectors on the generators.
class FgAbelianGroup {
 public:
  FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}

  FgAbelianGroup(std::size_t generators, IntMatrix relations, CoefficientMode mode = {})
      : generators_(generators), relations_(std::move(relations)), mode_(mode) {
    if (relations_.rows() == 0) relations_ = IntMatrix(0, generators_);
    if (relations_.cols() != generators_) throw Error(ErrorCode::DimensionMismatch, "relation width != generator count");
    auto snf = std::make_shared<Normalizer>();
    SmithResult s = smith_normal_form(relations_.transpose());
    snf->U = std::move(s.U);
    snf->U_inv = std::move(s.U_inv);
    snf->diag.assign(generators_, Int(0));
    for (std::size_t i = 0; i < s.rank; ++i) snf->diag[i] = s.D(i, i);
    normalizer_ = std::move(snf);
  }

  static FgAbelianGroup free(std::size_t n, CoefficientMode mode = {}) { return FgAbelianGroup(n, IntMatrix(0, n), mode); }
  static FgAbelianGroup cyclic(const Int& order, CoefficientMode mode = {}) {
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return FgAbelianGroup(1, r, mode);
  }
  static FgAbelianGroup zero() { return FgAbelianGroup(0, IntMatrix(0, 0)); }

  std::size_t generators() const noexcept { return generators_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const CoefficientMode& mode() const noexcept { return mode_; }

  FgAbelianGroup with_mode(CoefficientMode mode) const {
    FgAbelianGroup g = *this;
    g.mode_ = mode;
    return g;
  }

  IntVector basis(std::size_t i) const {
    IntVector v(generators_);
    v.at(i) = 1;
    return v;
  }

  IntVector zero_element() const { return IntVector(generators_); }

  /// Modulus of Smith coordinate i under the current mode: 0 = free, 1 = vanishes.
  Int coordinate_modulus(std::size_t i) const {
    const Int& d = normalizer_->diag[i];
    return d == 0 ? Int(0) : mode_.modulus(d);
  }

  /// Canonical representative: equal elements have equal normal forms.
  IntVector normal_form(const IntVector& x) const {
    if (x.size() != generators_) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
    IntVector z = normalizer_->U.apply(x);
    for (std::size_t i = 0; i < z.size(); ++i) {
      Int m = coordinate_modulus(i);
      if (m == 0) continue;
      z[i] = m == 1 ? Int(0) : mod_floor(z[i], m);
    }
    return z;
  }

  bool is_zero(const IntVector& x) const { return mackey::is_zero(normal_form(x)); }

  bool equal(const IntVector& x, const IntVector& y) const {
    IntVector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    return is_zero(d);
  }

  std::size_t free_rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < generators_; ++i) r += coordinate_modulus(i) == 0;
    return r;
  }

  /// Nontrivial torsion invariant factors under the current mode, in divisibility order.
  IntVector torsion_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < generators_; ++i) {
      Int m = coordinate_modulus(i);
      if (m > 1) out.push_back(m);
    }
    return out;
  }

  bool is_trivial() const { return free_rank() == 0 && torsion_factors().empty(); }

  /// Order of x, or nullopt when x has infinite order.
  std::optional<Int> order_of(const IntVector& x) const {
    IntVector z = normal_form(x);
    Int order = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] == 0) continue;
      Int m = coordinate_modulus(i);
      if (m == 0) return std::nullopt;
      order = lcm(order, m / gcd(m, z[i]));
    }
    return order;
  }

  /// Smith coordinates z = U x and the inverse lift.
  const IntMatrix& coordinates() const { return normalizer_->U; }
  const IntMatrix& coordinates_inverse() const { return normalizer_->U_inv; }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
      if (!first) os << " + ";
      first = false;
    };
    const std::string base = mode_.kind == CoefficientMode::Kind::Integral ? "Z" : mode_.str();
    if (std::size_t r = free_rank(); r > 0) {
      sep();
      os << base;
      if (r > 1) os << '^' << r;
    }
    for (const Int& t : torsion_factors()) {
      sep();
      os << "Z/" << t;
    }
    if (first) os << '0';
    return os.str();
  }

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.generators_ == b.generators_ && a.relations_ == b.relations_ && a.mode_ == b.mode_;
  }

 private:
  struct Normalizer {
    IntMatrix U, U_inv;
    IntVector diag;
  };

  std::size_t generators_;
  IntMatrix relations_;
  CoefficientMode mode_;
  std::shared_ptr<const Normalizer> normalizer_;
};

inline FgAbelianGroup direct_sum(const std::vector<FgAbelianGroup>& parts) {
  std::size_t n = 0, k = 0;
  for (const auto& p : parts) {
    n += p.generators();
    k += p.relations().rows();
  }
  IntMatrix rel(k, n);
  std::size_t row = 0, col = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.relations().rows(); ++i, ++row)
      for (std::size_t j = 0; j < p.generators(); ++j) rel(row, col + j) = p.relations()(i, j);
    col += p.generators();
  }
  return FgAbelianGroup(n, std::move(rel), parts.empty() ? CoefficientMode{} : parts.front().mode());
}

/// Localized group together with the comparison matrices to and from the input.
struct Localization {
  FgAbelianGroup group;
  IntMatrix to_local;    // generators(group) x generators(input)
  IntMatrix from_local;  // generators(input) x generators(group)
};

/// Canonical diagonal presentation over the coefficient ring: free rank plus
/// the invariant factors that are not units. Idempotent.
inline Localization localize(const FgAbelianGroup& A, CoefficientMode mode) {
  if (!(A.mode().kind == CoefficientMode::Kind::Integral || A.mode() == mode))
    throw Error(ErrorCode::InputError, "cannot relocalize " + A.mode().str() + " data at " + mode.str());
  const FgAbelianGroup in = A.with_mode(mode);
  std::vector<std::size_t> keep;
  std::vector<Int> moduli;
  for (std::size_t i = 0; i < in.generators(); ++i) {
    Int m = in.coordinate_modulus(i);
    if (m == 1) continue;
    keep.push_back(i);
    moduli.push_back(m);
  }
  std::size_t torsion = 0;
  for (const Int& m : moduli) torsion += m != 0;
  IntMatrix rel(torsion, keep.size());
  for (std::size_t k = 0, row = 0; k < keep.size(); ++k)
    if (moduli[k] != 0) rel(row++, k) = moduli[k];
  IntMatrix to(keep.size(), in.generators()), from(in.generators(), keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < in.generators(); ++j) {
      to(k, j) = in.coordinates()(keep[k], j);
      from(j, k) = in.coordinates_inverse()(j, keep[k]);
    }
  return {FgAbelianGroup(keep.size(), std::move(rel), mode), std::move(to), std::move(from)};
}

inline FgAbelianGroup localize_fg_abelian(const FgAbelianGroup& A, CoefficientMode mode) { return localize(A, mode).group; }

/// Group homomorphism given by an integer matrix on generators (target x source).
class AbHom {
 public:
  AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
      throw Error(ErrorCode::DimensionMismatch, "homomorphism matrix does not match its presentations");
  }

  const FgAbelianGroup& source() const noexcept { return source_; }
  const FgAbelianGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_.apply(x); }

  /// Source relations land in the target relation lattice.
  bool is_well_defined() const {
    for (std::size_t r = 0; r < source_.relations().rows(); ++r)
      if (!target_.is_zero(matrix_.apply(source_.relations().row(r)))) return false;
    return true;
  }

  bool equals(const AbHom& other) const {
    if (other.matrix_.rows() != matrix_.rows() || other.matrix_.cols() != matrix_.cols()) return false;
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      IntVector d(matrix_.rows());
      for (std::size_t i = 0; i < matrix_.rows(); ++i) d[i] = matrix_(i, j) - other.matrix_(i, j);
      if (!target_.is_zero(d)) return false;
    }
    return true;
  }

  FgAbelianGroup cokernel() const {
    const std::size_t k = target_.relations().rows();
    IntMatrix rel(k + matrix_.cols(), target_.generators());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < target_.generators(); ++j) rel(i, j) = target_.relations()(i, j);
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
      for (std::size_t j = 0; j < target_.generators(); ++j) rel(k + c, j) = matrix_(j, c);
    return FgAbelianGroup(target_.generators(), std::move(rel), target_.mode());
  }

  struct Kernel {
    FgAbelianGroup group;
    IntMatrix inclusion;  // generators(source) x generators(group)
  };

  Kernel kernel() const {
    const std::size_t ns = source_.generators(), nt = target_.generators();
    const std::size_t kt = target_.relations().rows();
    IntMatrix M(nt, ns + kt);
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t j = 0; j < ns; ++j) M(i, j) = matrix_(i, j);
      for (std::size_t r = 0; r < kt; ++r) M(i, ns + r) = -target_.relations()(r, i);
    }
    const IntMatrix K = integer_kernel(M);
    IntMatrix gens(K.cols(), ns);
    for (std::size_t c = 0; c < K.cols(); ++c)
      for (std::size_t j = 0; j < ns; ++j) gens(c, j) = K(j, c);
    const IntMatrix B = row_lattice_basis(gens);
    IntMatrix rel(source_.relations().rows(), B.rows());
    for (std::size_t r = 0; r < source_.relations().rows(); ++r) {
      auto c = express_in_row_basis(B, source_.relations().row(r));
      if (!c) throw Error(ErrorCode::PreconditionViolated, "kernel of an ill-defined homomorphism");
      for (std::size_t j = 0; j < B.rows(); ++j) rel(r, j) = (*c)[j];
    }
    return {FgAbelianGroup(B.rows(), std::move(rel), source_.mode()), B.transpose()};
  }

  /// Kernel and cokernel both vanish over the coefficient ring.
  bool is_isomorphism() const { return kernel().group.is_trivial() && cokernel().is_trivial(); }

 private:
  FgAbelianGroup source_, target_;
  IntMatrix matrix_;
};

/// g after f.
inline AbHom compose(const AbHom& g, const AbHom& f) {
  if (g.source().generators() != f.target().generators())
    throw Error(ErrorCode::DimensionMismatch, "homomorphisms are not composable");
  return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

}  // namespace mackey
