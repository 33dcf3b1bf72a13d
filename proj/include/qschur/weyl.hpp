#pragma once

// Weyl groups of types B_r and D_r realized as centro-symmetric permutations
// of [1,2r]: generators, lengths, enumerated group tables, parabolic
// subgroups as tabloid stabilizers, and distinguished (double) coset
// representatives.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

enum class Ambient : uint8_t { B, D };

// Generator labels: 1..r name s_1..s_r; kSigma names the type-D generator
// varsigma = s_r s_{r-1} s_r. Type B uses {1..r}, type D uses {1..r-1, kSigma}.
using Gen = int;
constexpr Gen kSigma = 0;

std::vector<Gen> generator_labels(Ambient type, int r);

class SignedPerm {
 public:
  explicit SignedPerm(int r);  // identity
  SignedPerm(int r, std::vector<int> images);

  int rank() const { return r_; }
  int degree() const { return 2 * r_; }
  // One-line form: image of j, 1 <= j <= 2r.
  int operator()(int j) const { return img_[static_cast<size_t>(j - 1)]; }
  const std::vector<int>& images() const { return img_; }

  // (u * v)(j) = u(v(j)); right multiplication by a generator permutes the
  // one-line form at the generator's positions.
  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool is_identity() const;

  bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
  bool operator!=(const SignedPerm& o) const { return img_ != o.img_; }
  bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

  static SignedPerm generator(int r, Gen g);  // image under the embedding into S_2r

  // Right descent: multiplying by g on the right strictly shortens.
  // For s_i: w(i) > w(i+1); for varsigma: w(r-1) > w(r+1).
  bool descent(Gen g) const;

  // Number of j in [1,r] with w(j) > r; w lies in W(D_r) iff this is even.
  int n_r() const;
  bool in_type_d() const { return n_r() % 2 == 0; }

  std::string str() const;

 private:
  int r_;
  std::vector<int> img_;
};

struct SignedPermHash {
  size_t operator()(const SignedPerm& w) const {
    size_t h = 1469598103934665603ull;
    for (int v : w.images()) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Coxeter length w.r.t. the ambient generating set, by greedy descent
// reduction to the identity.
int length(const SignedPerm& w, Ambient type);
// A reduced word (sequence of generator labels whose product is w).
std::vector<Gen> reduced_word(const SignedPerm& w, Ambient type);
// Conjugation by s_r; restricts to the graph automorphism of W(D_r).
SignedPerm flip(const SignedPerm& w);

// Fully enumerated group with multiplication tables keyed by element ids.
// Id 0 is the identity; BFS order from the generators, so ids are sorted by
// nondecreasing length.
struct WeylGroup {
  Ambient type;
  int r;
  std::vector<SignedPerm> elems;
  std::vector<int> len;                          // Coxeter length
  std::vector<int> inv;                          // id of inverse
  std::vector<std::vector<int>> right;           // right[id][gi] = id of w*g
  std::vector<std::vector<int>> left;            // left[id][gi] = id of g*w
  std::vector<std::pair<int, int>> parent;       // (shorter id, gi), identity: (-1,-1)
  std::vector<Gen> gens;                         // labels, indexed by gi

  size_t size() const { return elems.size(); }
  int id_of(const SignedPerm& w) const;          // -1 if not a member
  int gen_index(Gen g) const;                    // index into gens; BadGenerator
  std::vector<Gen> word_of(int id) const;        // reduced word from BFS parents

  // Cached per (type, r). Enumeration is breadth-first closure from the
  // generators; TooLarge beyond max_size.
  static const WeylGroup& get(Ambient type, int r, size_t max_size = 200000);

 private:
  std::unordered_map<SignedPerm, int, SignedPermHash> index_;
  friend WeylGroup build_weyl_group(Ambient, int, size_t);
};

// -- compositions and signed compositions ----------------------------------

struct Composition {
  std::vector<int> parts;  // lambda_1..lambda_{n+1}, nonnegative, sum r

  int sum() const;
  int size() const { return static_cast<int>(parts.size()); }
  // Largest i (1-based) with lambda_i != 0; 0 for the zero composition.
  int max_index() const;
  std::vector<int> partial_sums() const;  // lambda~_1..lambda~_{n+1}
  // hat(lambda) = (l_1..l_n, 2 l_{n+1}, l_n..l_1), length 2n+1.
  std::vector<int> hat() const;

  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
  std::string str() const;
};

// All of Lambda(k, r): weak compositions of r into k parts, lex order.
std::vector<Composition> all_compositions(int k, int r);

enum class Mark : uint8_t { Dot, Plus, Minus };

inline char mark_char(Mark m) {
  return m == Mark::Dot ? '.' : (m == Mark::Plus ? '+' : '-');
}

// Element of Lambda^D(n,r): mark is Dot iff lambda_{n+1} != 0.
struct SignedComposition {
  Composition base;
  Mark mark;

  SignedComposition(Composition b, Mark m);
  bool operator==(const SignedComposition& o) const {
    return mark == o.mark && base == o.base;
  }
  bool operator<(const SignedComposition& o) const {
    if (base.parts != o.base.parts) return base.parts < o.base.parts;
    return mark < o.mark;
  }
  std::string str() const;
};

std::vector<SignedComposition> all_signed_compositions(int n, int r);

// -- parabolic subgroups ----------------------------------------------------

// B(lambda) or D(lambda^mark); lambda in Lambda(n+1, r).
struct ParabolicSpec {
  Ambient ambient;
  int n;
  int r;
  Composition lambda;
  Mark mark;  // only meaningful for ambient D

  static ParabolicSpec typeB(int n, int r, Composition lambda);
  static ParabolicSpec typeD(int n, int r, SignedComposition alpha);

  // The tabloid: blocks of [1,2r] whose joint stabilizer is the subgroup.
  std::vector<std::vector<int>> blocks() const;
  // The ambient generators stabilizing every block.
  std::vector<Gen> generators() const;
  std::string str() const;
};

// Subgroup given by element ids into a WeylGroup, closed under multiplication.
struct Subgroup {
  const WeylGroup* G = nullptr;
  std::vector<int> elem_ids;   // sorted
  std::vector<Gen> gen_labels;

  size_t size() const { return elem_ids.size(); }
  bool contains(int id) const;
};

// Closure of the spec's generator set; equals the tabloid stabilizer
// (checked in the verification suites).
Subgroup enumerate_parabolic_subgroup(const ParabolicSpec& spec, size_t max_size = 200000);
std::vector<SignedPerm> enumerate_parabolic(const ParabolicSpec& spec, size_t max_size = 200000);

// All (P1, P2) double cosets of the full group: every element labelled with
// its coset, one distinguished (minimal length, unique) representative each.
struct DoubleCosetPartition {
  std::vector<int> rep_ids;   // per coset
  std::vector<int> coset_of;  // per element id
  std::vector<std::vector<int>> members;  // per coset, sorted ids
};
DoubleCosetPartition double_cosets(const Subgroup& P1, const Subgroup& P2);

std::vector<SignedPerm> distinguished_reps(const ParabolicSpec& left,
                                           const ParabolicSpec& right,
                                           size_t max_size = 200000);

// Members of P1 * w * P2, as sorted element ids.
std::vector<int> double_coset_members(const Subgroup& P1, int w_id, const Subgroup& P2);
// The unique minimal-length element of P1 * w * P2 (NonUniqueMinimum if the
// minimum is not unique).
int distinguished_rep_in(const Subgroup& P1, int w_id, const Subgroup& P2);
// Minimal-length right coset representative test: no generator of P
// left-descends w.
bool is_min_in_right_coset(const Subgroup& P, int w_id);

}  // namespace qschur
