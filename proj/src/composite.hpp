#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "structure.hpp"

namespace conjforge::composite {

// A count in N union {infinity}; infinite values arise only from tail
// conventions of finitely described automorphisms.
struct Count {
  bool infinite = false;
  long value = 0;

  static Count inf() { return Count{true, 0}; }
  Count& operator+=(long d) {
    if (!infinite) value += d;
    return *this;
  }
  void make_infinite() { infinite = true; value = 0; }
  auto operator<=>(const Count&) const = default;
};

// Conjugacy-class descriptor of a return map: the multiset of finite cycle
// lengths (descending; for an infinite carrier the cofinite fixed part is
// implicit and 1s are omitted) plus the count of infinite orbits. The C3
// composite digraphs carry their twists in the rotation group of the
// directed triangle, recorded in `rotation`; rotation -1 means not
// applicable.
struct TwistType {
  std::vector<int> lengths;
  int infinite_orbits = 0;
  int rotation = -1;

  auto operator<=>(const TwistType&) const = default;
};

// Permutation given by its support only; absent points are fixed.
using Perm = std::map<int, int>;

Perm compose_perms(const Perm& outer, const Perm& inner);  // outer o inner
Perm invert_perm(const Perm& p);
// Cycle type of a support permutation: lengths >= 2, descending.
std::vector<int> support_cycle_lengths(const Perm& p);
// Cycles of a support permutation, each least-first, ordered by least element.
std::vector<std::vector<int>> support_cycles(const Perm& p);

enum class Tail { Identity, IdentityTwoCycles };

// Automorphism of m copies of K_n (either parameter may be unbounded),
// described by a finitely supported permutation of the copy indices, a
// per-copy bijection labeling, and a tail convention for the undescribed
// copies: Identity leaves them fixed; IdentityTwoCycles (unbounded m only)
// pairs consecutive undescribed copies into identity-twist 2-cycles.
// Constructors canonicalize: self-maps in the copy permutation and empty
// per-copy supports are dropped.
class CompositeAutomorphism {
public:
  CompositeAutomorphism(std::optional<int> copies, std::optional<int> copy_size,
                        Perm copy_perm, std::map<int, Perm> per_copy,
                        Tail tail = Tail::Identity);

  std::optional<int> copies() const { return copies_; }
  std::optional<int> copy_size() const { return copy_size_; }
  const Perm& copy_perm() const { return copy_perm_; }
  const std::map<int, Perm>& per_copy() const { return per_copy_; }
  Tail tail() const { return tail_; }

  // Explicitly described copies: the copy permutation's support together
  // with copies carrying a nontrivial labeling.
  std::set<int> described() const;

  // Total on copy indices; resolves the tail convention (including the
  // pairing of undescribed copies under IdentityTwoCycles).
  int apply_copy(int c) const;
  // The element map attached to copy c (identity when undescribed).
  int apply_element(int c, int e) const;

  // Vertex permutation of m*K_n with vertex id = copy*n + element.
  // Requires finite copies and copy size.
  VertexMap materialize() const;

  bool operator==(const CompositeAutomorphism&) const = default;

private:
  std::optional<int> copies_, copy_size_;
  Perm copy_perm_;
  std::map<int, Perm> per_copy_;
  Tail tail_;
};

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // on described copies, least-first
  Count tail_count;                      // implicit fixed copies or 2-cycles
  Tail tail;
};

CycleDecomposition cycle_decompose(const CompositeAutomorphism& phi);

// Conjugacy class of the return map around a finite cycle of copies,
// computed from the cycle's least copy. Base-point independence holds and is
// verified by tests rather than assumed.
TwistType twist_type(const CompositeAutomorphism& phi, const std::vector<int>& cycle);

// Complete conjugacy invariant: per (cycle length, twist type) counts, the
// number of infinite cycles, and the realized twist set. class_rotation
// records the action on the three classes for the C3[infinity] digraph.
struct CycleInvariant {
  std::map<std::pair<int, TwistType>, Count> finite_cycles;
  Count infinite_cycles;
  std::set<TwistType> realized;
  int class_rotation = -1;

  bool operator==(const CycleInvariant&) const = default;
};

CycleInvariant invariant(const CompositeAutomorphism& phi);

// True iff the invariants agree. Requires equal (m, n) signatures.
bool decide_conjugacy(const CompositeAutomorphism& phi,
                      const CompositeAutomorphism& psi);

// Explicit witness delta with delta o phi = psi o delta, built cycle-by-cycle
// over matched (length, twist) classes in lexicographic order. Requires
// decide_conjugacy(phi, psi).
CompositeAutomorphism build_conjugator_composite(const CompositeAutomorphism& phi,
                                                 const CompositeAutomorphism& psi);

// Exact check of delta o phi = psi o delta: pointwise over a window covering
// every described copy and element, plus the structural tail argument that
// extends the check to the whole domain.
bool composite_commutes(const CompositeAutomorphism& delta,
                        const CompositeAutomorphism& phi,
                        const CompositeAutomorphism& psi);

// E_set coding for Aut(infinity * K_infinity).
struct EsetTuple {
  TwistType twist;
  int k = 0;
  Count count;
  Count infinite_cycles;
  auto operator<=>(const EsetTuple&) const = default;
};

struct EsetCode {
  std::set<EsetTuple> tuples;
  // Twist types carried by tuples with finite counts, i.e. the explicitly
  // realized set (the tail contributes the infinite-count tuple).
  std::set<TwistType> finite_twist_set() const;
  bool operator==(const EsetCode&) const = default;
};

EsetCode encode_eset(const CompositeAutomorphism& phi);

// One explicit identity-labeled-versus-twisted 2-cycle of copies per distinct
// listed twist type, with the identity-2-cycles tail.
CompositeAutomorphism decode_eset(const std::vector<TwistType>& enumeration);

// Invariant for the two C3 composite digraphs, detected by signature:
// (m unbounded, n = 3) is infinity*C3 with rotation twists; (m = 3,
// n unbounded) is C3[infinity] with the class rotation recorded.
CycleInvariant c3_composite_invariant(const CompositeAutomorphism& phi);

// Finite-structure reductions.
struct StructureAutomorphism {
  FiniteStructure structure;
  VertexMap map;
};

FiniteStructure complete_graph(int n);
FiniteStructure disjoint_copies(const FiniteStructure& g, int k);
FiniteStructure blowup_structure(const FiniteStructure& g, int k);

// phi on the first copy of G, identity on the rest. Requires a connected G
// and a verified automorphism.
StructureAutomorphism direct_sum_id(const FiniteStructure& g, const VertexMap& phi,
                                    int k);
// phi[k] on G[k]: acts by phi on the independent k-classes, trivially within
// them. Requires a tournament.
StructureAutomorphism blowup(const FiniteStructure& g, const VertexMap& phi, int k);

// Full Aut(m*K_n) as composite automorphisms, in lexicographic enumeration
// order. Intended for the small exhaustive oracles.
std::vector<CompositeAutomorphism> all_composite_automorphisms(int m, int n);

}  // namespace conjforge::composite
