#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/error.hpp"

namespace mackey {

/// Index of an element in FiniteGroup::elements().
using Elem = std::uint32_t;

/// Permutation of {0, ..., n-1}, stored as its image sequence.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw Error(ErrorCode::InvalidPermutation, "image sequence is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0u);
    return Perm(std::move(im));
  }

  /// Product of disjoint-or-not cycles, applied right to left.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
    Perm p = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<std::uint32_t> im(n);
      std::iota(im.begin(), im.end(), 0u);
      const auto& cyc = *it;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (cyc[k] >= n) throw Error(ErrorCode::InvalidPermutation, "cycle point out of range");
        im[cyc[k]] = cyc[(k + 1) % cyc.size()];
      }
      p = Perm(std::move(im)) * p;
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidPermutation, "degree mismatch in product");
    std::vector<std::uint32_t> im(a.degree());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = a.images_[b.images_[x]];
    Perm p;
    p.images_ = std::move(im);
    return p;
  }

  Perm inverse() const {
    std::vector<std::uint32_t> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<std::uint32_t>(x);
    Perm p;
    p.images_ = std::move(im);
    return p;
  }

  bool is_odd() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t x = s; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 1;
  }

  std::string cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s) continue;
      os << '(';
      for (std::size_t x = s; !seen[x]; x = images_[x]) {
        if (x != s) os << ' ';
        os << x;
        seen[x] = true;
      }
      os << ')';
    }
    std::string out = os.str();
    return out.empty() ? "()" : out;
  }

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Finite permutation group with elements in lexicographic order of their
/// image sequences, so the identity is always element 0.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 200;

  static std::shared_ptr<const FiniteGroup> generate(std::size_t degree, const std::vector<Perm>& gens,
                                                     std::size_t order_cap = kDefaultOrderCap) {
    for (const auto& g : gens)
      if (g.degree() != degree) throw Error(ErrorCode::InvalidPermutation, "generator degree differs from group degree");
    std::set<Perm> seen{Perm::identity(degree)};
    std::deque<Perm> queue{Perm::identity(degree)};
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > order_cap)
            throw Error(ErrorCode::OrderCapExceeded, "closure exceeds order cap " + std::to_string(order_cap));
          queue.push_back(std::move(y));
        }
      }
    }
    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->degree_ = degree;
    group->elements_.assign(seen.begin(), seen.end());
    const std::size_t n = group->elements_.size();
    group->mul_.resize(n * n);
    group->inv_.resize(n);
    std::map<Perm, Elem> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(group->elements_[i], static_cast<Elem>(i));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        group->mul_[a * n + b] = index.at(group->elements_[a] * group->elements_[b]);
      group->inv_[a] = index.at(group->elements_[a].inverse());
    }
    for (const auto& g : gens) group->generators_.push_back(index.at(g));
    return group;
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  static constexpr Elem identity() noexcept { return 0; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(Elem g) const { return elements_.at(g); }
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * elements_.size() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// f x f^-1
  Elem conjugate(Elem f, Elem x) const { return mul(mul(f, x), inv(f)); }

  std::optional<Elem> index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return std::nullopt;
    return static_cast<Elem>(it - elements_.begin());
  }

  std::size_t element_order(Elem g) const {
    std::size_t k = 1;
    for (Elem x = g; x != identity(); x = mul(x, g)) ++k;
    return k;
  }

  /// Product of generators listed by index; the empty word is the identity.
  Elem word(const std::vector<std::size_t>& letters) const {
    Elem x = identity();
    for (std::size_t l : letters) {
      if (l >= generators_.size()) throw Error(ErrorCode::InputError, "word letter out of range");
      x = mul(x, generators_[l]);
    }
    return x;
  }

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Elem> generators_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a parent group, as a sorted member set.
class SubgroupRef {
 public:
  SubgroupRef() = default;

  /// Validates closure; throws NotASubgroup otherwise.
  SubgroupRef(GroupPtr parent, std::vector<Elem> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent_->order(), false);
    for (Elem m : members_) {
      if (m >= parent_->order()) throw Error(ErrorCode::NotASubgroup, "member index out of range");
      mask_[m] = true;
    }
    if (members_.empty() || members_.front() != FiniteGroup::identity())
      throw Error(ErrorCode::NotASubgroup, "subgroup must contain the identity");
    for (Elem a : members_) {
      if (!mask_[parent_->inv(a)]) throw Error(ErrorCode::NotASubgroup, "not closed under inverses");
      for (Elem b : members_)
        if (!mask_[parent_->mul(a, b)]) throw Error(ErrorCode::NotASubgroup, "not closed under products");
    }
  }

  static SubgroupRef whole(const GroupPtr& G) {
    std::vector<Elem> all(G->order());
    std::iota(all.begin(), all.end(), Elem{0});
    return SubgroupRef(G, std::move(all));
  }
  static SubgroupRef trivial(const GroupPtr& G) { return SubgroupRef(G, {FiniteGroup::identity()}); }

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem g) const { return g < mask_.size() && mask_[g]; }

  bool is_subgroup_of(const SubgroupRef& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](Elem m) { return other.contains(m); });
  }

  /// f H f^-1
  SubgroupRef conjugate(Elem f) const {
    std::vector<Elem> m;
    m.reserve(members_.size());
    for (Elem x : members_) m.push_back(parent_->conjugate(f, x));
    return SubgroupRef(parent_, std::move(m));
  }

  SubgroupRef intersect(const SubgroupRef& other) const {
    std::vector<Elem> m;
    for (Elem x : members_)
      if (other.contains(x)) m.push_back(x);
    return SubgroupRef(parent_, std::move(m));
  }

  bool is_normal() const {
    for (Elem f = 0; f < parent_->order(); ++f)
      for (Elem x : members_)
        if (!contains(parent_->conjugate(f, x))) return false;
    return true;
  }

  /// Normal in `within` (which must contain this subgroup).
  bool is_normal_in(const SubgroupRef& within) const {
    for (Elem f : within.members())
      for (Elem x : members_)
        if (!contains(parent_->conjugate(f, x))) return false;
    return true;
  }

  /// Order by (order, member list): the canonical subgroup order.
  friend bool operator<(const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members_ < b.members_;
  }
  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) { return a.members_ == b.members_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

inline SubgroupRef generated_subgroup(const GroupPtr& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(G->order(), false);
  std::vector<Elem> members{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = true;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (Elem g : gens) {
      Elem y = G->mul(members[k], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return SubgroupRef(G, std::move(members));
}

/// All subgroups, each exactly once, sorted by (order, member list).
/// Cyclic extension: every subgroup is reached from the trivial one by
/// repeatedly adjoining a single element.
inline std::vector<SubgroupRef> list_subgroups(const GroupPtr& G) {
  if (G->order() > FiniteGroup::kDefaultOrderCap)
    throw Error(ErrorCode::OrderCapExceeded, "group order exceeds subgroup enumeration cap");
  std::set<std::vector<Elem>> seen;
  std::vector<SubgroupRef> frontier{SubgroupRef::trivial(G)};
  std::vector<SubgroupRef> all;
  seen.insert(frontier.front().members());
  while (!frontier.empty()) {
    std::vector<SubgroupRef> next;
    for (const auto& H : frontier) {
      all.push_back(H);
      std::vector<bool> done(G->order(), false);
      for (Elem g = 0; g < G->order(); ++g) {
        if (H.contains(g) || done[g]) continue;
        std::vector<Elem> gens = H.members();
        gens.push_back(g);
        SubgroupRef K = generated_subgroup(G, gens);
        // <H, gh> = <H, g> for h in H; other members of K may generate less.
        for (Elem h : H.members()) done[G->mul(g, h)] = true;
        if (seen.insert(K.members()).second) next.push_back(std::move(K));
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

/// Subgroup list of a group with index lookups for containment, conjugation
/// and intersection. Index order is the canonical (order, members) order.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupPtr G) : group_(std::move(G)), subgroups_(list_subgroups(group_)) {
    for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i].members(), i);
    const std::size_t n = subgroups_.size();
    conj_.resize(group_->order() * n);
    for (Elem f = 0; f < group_->order(); ++f)
      for (std::size_t s = 0; s < n; ++s) conj_[f * n + s] = index_of(subgroups_[s].conjugate(f));
    contains_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) contains_[a * n + b] = subgroups_[b].is_subgroup_of(subgroups_[a]);
  }

  static std::shared_ptr<const SubgroupLattice> of(GroupPtr G) { return std::make_shared<const SubgroupLattice>(std::move(G)); }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const SubgroupRef& operator[](std::size_t i) const { return subgroups_.at(i); }
  const std::vector<SubgroupRef>& subgroups() const noexcept { return subgroups_; }

  std::size_t index_of(const SubgroupRef& H) const {
    auto it = index_.find(H.members());
    if (it == index_.end()) throw Error(ErrorCode::NotASubgroup, "subgroup not in lattice");
    return it->second;
  }

  std::size_t trivial() const noexcept { return 0; }
  std::size_t whole() const noexcept { return subgroups_.size() - 1; }

  /// Index of f H_s f^-1.
  std::size_t conjugate(std::size_t s, Elem f) const { return conj_[f * subgroups_.size() + s]; }
  /// H_small <= H_big
  bool is_subgroup(std::size_t small, std::size_t big) const { return contains_[big * subgroups_.size() + small]; }
  std::size_t intersection(std::size_t a, std::size_t b) const { return index_of(subgroups_[a].intersect(subgroups_[b])); }

  std::size_t index(std::size_t small, std::size_t big) const {
    if (!is_subgroup(small, big)) throw Error(ErrorCode::NotNested, "index of non-nested pair");
    return subgroups_[big].order() / subgroups_[small].order();
  }

  /// Subgroups of H_s, as lattice indices.
  std::vector<std::size_t> subgroups_of(std::size_t s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      if (is_subgroup(i, s)) out.push_back(i);
    return out;
  }

  /// Canonical representative (minimal index) of the H_within-conjugacy class of H_s.
  std::size_t class_rep(std::size_t s, std::size_t within) const {
    std::size_t best = s;
    for (Elem f : subgroups_[within].members()) best = std::min(best, conjugate(s, f));
    return best;
  }

 private:
  GroupPtr group_;
  std::vector<SubgroupRef> subgroups_;
  std::map<std::vector<Elem>, std::size_t> index_;
  std::vector<std::size_t> conj_;
  std::vector<bool> contains_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

// ---------------------------------------------------------------------------
// Cosets

/// Ordered left coset representatives a_1, ..., a_r of I in J.
class RepSystem {
 public:
  RepSystem() = default;

  /// Validates that `reps` meets every left coset a I of I in J exactly once.
  RepSystem(SubgroupRef I, SubgroupRef J, std::vector<Elem> reps)
      : sub_(std::move(I)), super_(std::move(J)), reps_(std::move(reps)) {
    if (!sub_.is_subgroup_of(super_)) throw Error(ErrorCode::NotNested, "representative system needs I <= J");
    const auto& G = *sub_.parent();
    if (reps_.size() * sub_.order() != super_.order())
      throw Error(ErrorCode::IncompatibleRepSystems, "wrong number of coset representatives");
    std::vector<bool> hit(G.order(), false);
    for (Elem a : reps_) {
      if (!super_.contains(a)) throw Error(ErrorCode::IncompatibleRepSystems, "representative outside J");
      for (Elem i : sub_.members()) {
        Elem x = G.mul(a, i);
        if (hit[x]) throw Error(ErrorCode::IncompatibleRepSystems, "two representatives share a coset");
        hit[x] = true;
      }
    }
  }

  const SubgroupRef& sub() const noexcept { return sub_; }
  const SubgroupRef& super() const noexcept { return super_; }
  const std::vector<Elem>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  Elem operator[](std::size_t k) const { return reps_.at(k); }

  /// Position of the representative whose coset contains x.
  std::size_t coset_of(Elem x) const {
    const auto& G = *sub_.parent();
    for (std::size_t k = 0; k < reps_.size(); ++k)
      if (sub_.contains(G.mul(G.inv(reps_[k]), x))) return k;
    throw Error(ErrorCode::NotNested, "element outside J");
  }

  friend bool operator==(const RepSystem& a, const RepSystem& b) {
    return a.sub_ == b.sub_ && a.super_ == b.super_ && a.reps_ == b.reps_;
  }

 private:
  SubgroupRef sub_, super_;
  std::vector<Elem> reps_;
};

/// Canonical system: the minimal element of every coset, sorted, so a_1 = e.
inline RepSystem left_coset_reps(const SubgroupRef& J, const SubgroupRef& I) {
  if (!I.is_subgroup_of(J)) throw Error(ErrorCode::NotNested, "left_coset_reps needs I <= J");
  const auto& G = *J.parent();
  std::vector<bool> covered(G.order(), false);
  std::vector<Elem> reps;
  for (Elem a : J.members()) {
    if (covered[a]) continue;
    reps.push_back(a);  // members are sorted, so a is the coset minimum
    for (Elem i : I.members()) covered[G.mul(a, i)] = true;
  }
  return RepSystem(I, J, std::move(reps));
}

/// Minimal representatives of the double cosets J f I inside K, sorted.
inline std::vector<Elem> double_coset_reps(const SubgroupRef& K, const SubgroupRef& J, const SubgroupRef& I) {
  if (!I.is_subgroup_of(K) || !J.is_subgroup_of(K)) throw Error(ErrorCode::NotNested, "double_coset_reps needs I, J <= K");
  const auto& G = *K.parent();
  std::vector<bool> covered(G.order(), false);
  std::vector<Elem> reps;
  for (Elem f : K.members()) {
    if (covered[f]) continue;
    reps.push_back(f);
    for (Elem j : J.members())
      for (Elem i : I.members()) covered[G.mul(G.mul(j, f), i)] = true;
  }
  return reps;
}

/// Size of the double coset J f I.
inline std::size_t double_coset_size(const SubgroupRef& J, Elem f, const SubgroupRef& I) {
  const auto& G = *J.parent();
  std::set<Elem> s;
  for (Elem j : J.members())
    for (Elem i : I.members()) s.insert(G.mul(G.mul(j, f), i));
  return s.size();
}

/// Conjugacy classes of elements, each sorted, ordered by their minimal element.
inline std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<bool> seen(G.order(), false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    std::set<Elem> cls;
    for (Elem f = 0; f < G.order(); ++f) cls.insert(G.conjugate(f, x));
    for (Elem y : cls) seen[y] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Classification and families

inline std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<unsigned>(n));
  return ps;
}

inline bool is_power_of(std::size_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Which of the cyclic / p-group / p-elementary / p-hyperelementary classes a
/// subgroup belongs to. Prime sets range over the primes dividing |G|; for any
/// other prime p a subgroup is p-(hyper)elementary exactly when it is cyclic.
struct SubgroupClassification {
  bool is_cyclic = false;
  std::optional<unsigned> p_group_prime;
  std::set<unsigned> elementary_primes;
  std::set<unsigned> hyperelementary_primes;
  /// Normal cyclic C of p-power index, coprime to p, for each hyperelementary prime.
  std::map<unsigned, SubgroupRef> witnesses;
  std::set<unsigned> considered_primes;

  bool hyperelementary_at(unsigned p) const {
    return considered_primes.count(p) ? hyperelementary_primes.count(p) > 0 : is_cyclic;
  }
  bool elementary_at(unsigned p) const { return considered_primes.count(p) ? elementary_primes.count(p) > 0 : is_cyclic; }
  bool is_hyperelementary() const { return is_cyclic || !hyperelementary_primes.empty(); }
  bool is_elementary() const { return is_cyclic || !elementary_primes.empty(); }
};

inline SubgroupClassification classify_subgroup(const GroupPtr& G, const SubgroupRef& H) {
  if (H.parent() != G) throw Error(ErrorCode::NotASubgroup, "subgroup of a different group");
  SubgroupClassification out;
  const std::size_t h = H.order();
  for (Elem x : H.members())
    if (G->element_order(x) == h) out.is_cyclic = true;
  if (auto ps = prime_divisors(h); ps.size() == 1) out.p_group_prime = ps.front();

  // Normal cyclic subgroups of H; each is generated by one of its members.
  std::vector<SubgroupRef> normal_cyclic;
  std::set<std::vector<Elem>> seen;
  for (Elem x : H.members()) {
    SubgroupRef C = generated_subgroup(G, {x});
    if (seen.insert(C.members()).second && C.is_normal_in(H)) normal_cyclic.push_back(std::move(C));
  }
  std::sort(normal_cyclic.begin(), normal_cyclic.end());

  for (unsigned p : prime_divisors(G->order())) {
    out.considered_primes.insert(p);
    for (const auto& C : normal_cyclic) {
      if (C.order() % p == 0 || !is_power_of(h / C.order(), p)) continue;
      if (!out.hyperelementary_primes.count(p)) {
        out.hyperelementary_primes.insert(p);
        out.witnesses.emplace(p, C);
      }
      // Direct product C x P: the p-elements then form the unique Sylow
      // subgroup and commute with C.
      std::vector<Elem> p_elements;
      for (Elem x : H.members())
        if (is_power_of(G->element_order(x), p)) p_elements.push_back(x);
      bool direct = p_elements.size() == h / C.order();
      for (Elem x : p_elements)
        for (Elem c : C.members())
          if (direct && G->mul(x, c) != G->mul(c, x)) direct = false;
      if (direct) {
        out.elementary_primes.insert(p);
        break;
      }
    }
  }
  return out;
}

class Family {
 public:
  enum class Tag { Hyperelementary, PHyperelementary, Elementary, PElementary, Cyclic, Custom };

  Family(LatticePtr lattice, Tag tag, unsigned prime, std::vector<std::size_t> members)
      : lattice_(std::move(lattice)), tag_(tag), prime_(prime), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static Family custom(LatticePtr lattice, std::vector<std::size_t> members) {
    return Family(std::move(lattice), Tag::Custom, 0, std::move(members));
  }
  static Family all(const LatticePtr& lattice) {
    std::vector<std::size_t> m(lattice->size());
    std::iota(m.begin(), m.end(), std::size_t{0});
    return custom(lattice, std::move(m));
  }
  static Family proper(const LatticePtr& lattice) {
    std::vector<std::size_t> m(lattice->size() - 1);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return custom(lattice, std::move(m));
  }

  const LatticePtr& lattice() const noexcept { return lattice_; }
  Tag tag() const noexcept { return tag_; }
  unsigned prime() const noexcept { return prime_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool contains(std::size_t s) const { return std::binary_search(members_.begin(), members_.end(), s); }
  std::size_t size() const noexcept { return members_.size(); }

  /// Closed under taking subgroups and under conjugation by the parent group.
  bool is_closed() const {
    const auto& L = *lattice_;
    for (std::size_t s : members_) {
      for (std::size_t t : L.subgroups_of(s))
        if (!contains(t)) return false;
      for (Elem f = 0; f < L.group()->order(); ++f)
        if (!contains(L.conjugate(s, f))) return false;
    }
    return true;
  }

  std::string name() const {
    switch (tag_) {
      case Tag::Hyperelementary: return "H";
      case Tag::PHyperelementary: return "Hp:" + std::to_string(prime_);
      case Tag::Elementary: return "E";
      case Tag::PElementary: return "Ep:" + std::to_string(prime_);
      case Tag::Cyclic: return "FC";
      case Tag::Custom: return "custom";
    }
    return "custom";
  }

 private:
  LatticePtr lattice_;
  Tag tag_;
  unsigned prime_;
  std::vector<std::size_t> members_;
};

inline Family subgroup_family(const LatticePtr& lattice, Family::Tag tag, unsigned prime = 0) {
  if ((tag == Family::Tag::PHyperelementary || tag == Family::Tag::PElementary)) {
    bool ok = prime >= 2;
    for (unsigned q = 2; q * q <= prime && ok; ++q) ok = prime % q != 0;
    if (!ok) throw Error(ErrorCode::InputError, "family tag needs a prime");
  }
  if (tag == Family::Tag::Custom) throw Error(ErrorCode::InputError, "custom families are built from explicit members");
  std::vector<std::size_t> members;
  for (std::size_t s = 0; s < lattice->size(); ++s) {
    const auto c = classify_subgroup(lattice->group(), (*lattice)[s]);
    bool in = false;
    switch (tag) {
      case Family::Tag::Hyperelementary: in = c.is_hyperelementary(); break;
      case Family::Tag::PHyperelementary: in = c.hyperelementary_at(prime); break;
      case Family::Tag::Elementary: in = c.is_elementary(); break;
      case Family::Tag::PElementary: in = c.elementary_at(prime); break;
      case Family::Tag::Cyclic: in = c.is_cyclic; break;
      case Family::Tag::Custom: break;
    }
    if (in) members.push_back(s);
  }
  return Family(lattice, tag, prime, std::move(members));
}

// ---------------------------------------------------------------------------
// Named groups

inline GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InputError, "cyclic group of order 0");
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  if (n == 1) return FiniteGroup::generate(1, {});
  return FiniteGroup::generate(n, {Perm(im)});
}

/// Q8 in its regular representation on {±1, ±i, ±j, ±k}.
inline GroupPtr quaternion_group() {
  // unit index 2*u + s encodes sign s on basis unit u in {1, i, j, k}
  static constexpr int table[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left_mult = [&](int u) {
    std::vector<std::uint32_t> im(8);
    for (int v = 0; v < 4; ++v)
      for (int s = 0; s < 2; ++s) {
        const auto& prod = table[u][v];
        im[2 * v + s] = static_cast<std::uint32_t>(2 * prod[0] + ((prod[1] + s) % 2));
      }
    return Perm(im);
  };
  return FiniteGroup::generate(8, {left_mult(1), left_mult(2)});
}

inline GroupPtr named_group(const std::string& name) {
  if (name == "S3") return FiniteGroup::generate(3, {Perm::from_cycles(3, {{0, 1, 2}}), Perm::from_cycles(3, {{0, 1}})});
  if (name == "D4") return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{1, 3}})});
  if (name == "A4") return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{0, 1}, {2, 3}})});
  if (name == "S4") return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})});
  if (name == "V4") return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && name[0] == 'C' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    std::size_t n = std::stoul(name.substr(1));
    if (n > FiniteGroup::kDefaultOrderCap) throw Error(ErrorCode::OrderCapExceeded, name + " exceeds order cap");
    return cyclic_group(n);
  }
  throw Error(ErrorCode::InputError, "unknown group '" + name + "'");
}

}  // namespace mackey
