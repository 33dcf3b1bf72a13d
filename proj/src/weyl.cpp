#include "qschur/weyl.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace qschur {

std::vector<Gen> generator_labels(Ambient type, int r) {
  std::vector<Gen> g;
  if (type == Ambient::B) {
    for (int i = 1; i <= r; ++i) g.push_back(i);
  } else {
    for (int i = 1; i <= r - 1; ++i) g.push_back(i);
    g.push_back(kSigma);
  }
  return g;
}

SignedPerm::SignedPerm(int r) : r_(r), img_(static_cast<size_t>(2 * r)) {
  if (r < 1) throw BadLabel("SignedPerm: rank must be >= 1");
  std::iota(img_.begin(), img_.end(), 1);
}

SignedPerm::SignedPerm(int r, std::vector<int> images) : r_(r), img_(std::move(images)) {
  if (static_cast<int>(img_.size()) != 2 * r) throw BadLabel("SignedPerm: wrong image length");
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > 2 * r || seen[static_cast<size_t>(v)])
      throw BadLabel("SignedPerm: images not a bijection of [1,2r]");
    seen[static_cast<size_t>(v)] = 1;
  }
  for (int j = 1; j <= 2 * r; ++j)
    if ((*this)(j) + (*this)(2 * r + 1 - j) != 2 * r + 1)
      throw BadLabel("SignedPerm: centro-symmetry violated");
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (r_ != o.r_) throw AmbientMismatch("SignedPerm: rank mismatch");
  SignedPerm w(r_);
  for (int j = 1; j <= 2 * r_; ++j) w.img_[static_cast<size_t>(j - 1)] = (*this)(o(j));
  return w;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm w(r_);
  for (int j = 1; j <= 2 * r_; ++j) w.img_[static_cast<size_t>((*this)(j)-1)] = j;
  return w;
}

bool SignedPerm::is_identity() const {
  for (int j = 1; j <= 2 * r_; ++j)
    if ((*this)(j) != j) return false;
  return true;
}

SignedPerm SignedPerm::generator(int r, Gen g) {
  SignedPerm w(r);
  auto swap_vals = [&w](int a, int b) { std::swap(w.img_[a - 1], w.img_[b - 1]); };
  if (g == kSigma) {
    if (r < 2) throw BadLabel("generator: varsigma needs r >= 2");
    swap_vals(r - 1, r + 1);
    swap_vals(r, r + 2);
  } else if (g == r) {
    swap_vals(r, r + 1);
  } else if (g >= 1 && g < r) {
    swap_vals(g, g + 1);
    swap_vals(2 * r - g, 2 * r + 1 - g);
  } else {
    throw BadLabel("generator: label out of range");
  }
  return w;
}

bool SignedPerm::descent(Gen g) const {
  if (g == kSigma) {
    if (r_ < 2) throw BadGenerator("descent: varsigma needs r >= 2");
    return (*this)(r_ - 1) > (*this)(r_ + 1);
  }
  if (g < 1 || g > r_) throw BadGenerator("descent: label out of range");
  return (*this)(g) > (*this)(g + 1);
}

int SignedPerm::n_r() const {
  int c = 0;
  for (int j = 1; j <= r_; ++j)
    if ((*this)(j) > r_) ++c;
  return c;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < img_.size(); ++i) os << (i ? " " : "") << img_[i];
  os << "]";
  return os.str();
}

int length(const SignedPerm& w, Ambient type) {
  if (type == Ambient::D && !w.in_type_d())
    throw AmbientMismatch("length: element not in W(D_r)");
  const auto gens = generator_labels(type, w.rank());
  SignedPerm v = w;
  int steps = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Gen g : gens) {
      if (v.descent(g)) {
        v = v * SignedPerm::generator(v.rank(), g);
        ++steps;
        moved = true;
        break;
      }
    }
  }
  if (!v.is_identity()) throw BadLabel("length: reduction did not reach identity");
  return steps;
}

std::vector<Gen> reduced_word(const SignedPerm& w, Ambient type) {
  if (type == Ambient::D && !w.in_type_d())
    throw AmbientMismatch("reduced_word: element not in W(D_r)");
  const auto gens = generator_labels(type, w.rank());
  SignedPerm v = w;
  std::vector<Gen> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Gen g : gens) {
      if (v.descent(g)) {
        v = v * SignedPerm::generator(v.rank(), g);
        word.push_back(g);
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SignedPerm flip(const SignedPerm& w) {
  SignedPerm sr = SignedPerm::generator(w.rank(), w.rank());
  return sr * w * sr;
}

// -- WeylGroup ---------------------------------------------------------------

int WeylGroup::id_of(const SignedPerm& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::gen_index(Gen g) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == g) return static_cast<int>(i);
  throw BadGenerator("gen_index: label not in ambient generating set");
}

std::vector<Gen> WeylGroup::word_of(int id) const {
  std::vector<Gen> word;
  while (parent[static_cast<size_t>(id)].first >= 0) {
    word.push_back(gens[static_cast<size_t>(parent[static_cast<size_t>(id)].second)]);
    id = parent[static_cast<size_t>(id)].first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylGroup build_weyl_group(Ambient type, int r, size_t max_size) {
  WeylGroup G;
  G.type = type;
  G.r = r;
  G.gens = generator_labels(type, r);
  std::vector<SignedPerm> gen_perms;
  for (Gen g : G.gens) gen_perms.push_back(SignedPerm::generator(r, g));

  SignedPerm id(r);
  G.elems.push_back(id);
  G.index_.emplace(id, 0);
  G.len.push_back(0);
  G.parent.emplace_back(-1, -1);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < gen_perms.size(); ++gi) {
      SignedPerm next = G.elems[static_cast<size_t>(cur)] * gen_perms[gi];
      if (G.index_.find(next) == G.index_.end()) {
        if (G.elems.size() >= max_size) throw TooLarge("WeylGroup: enumeration exceeds budget");
        int nid = static_cast<int>(G.elems.size());
        G.elems.push_back(next);
        G.index_.emplace(next, nid);
        G.len.push_back(G.len[static_cast<size_t>(cur)] + 1);
        G.parent.emplace_back(cur, static_cast<int>(gi));
        queue.push_back(nid);
      }
    }
  }

  const size_t sz = G.elems.size();
  G.right.assign(sz, std::vector<int>(G.gens.size()));
  G.left.assign(sz, std::vector<int>(G.gens.size()));
  G.inv.assign(sz, 0);
  for (size_t i = 0; i < sz; ++i) {
    for (size_t gi = 0; gi < gen_perms.size(); ++gi) {
      G.right[i][gi] = G.id_of(G.elems[i] * gen_perms[gi]);
      G.left[i][gi] = G.id_of(gen_perms[gi] * G.elems[i]);
    }
    G.inv[i] = G.id_of(G.elems[i].inverse());
  }
  return G;
}

const WeylGroup& WeylGroup::get(Ambient type, int r, size_t max_size) {
  static std::map<std::pair<int, int>, WeylGroup> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(type == Ambient::B ? 0 : 1, r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_weyl_group(type, r, max_size)).first;
  return it->second;
}

// -- compositions ------------------------------------------------------------

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::max_index() const {
  for (int i = size(); i >= 1; --i)
    if (parts[static_cast<size_t>(i - 1)] != 0) return i;
  return 0;
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> s(parts.size());
  std::partial_sum(parts.begin(), parts.end(), s.begin());
  return s;
}

std::vector<int> Composition::hat() const {
  const int n = size() - 1;
  std::vector<int> h;
  h.reserve(static_cast<size_t>(2 * n + 1));
  for (int i = 0; i < n; ++i) h.push_back(parts[static_cast<size_t>(i)]);
  h.push_back(2 * parts[static_cast<size_t>(n)]);
  for (int i = n - 1; i >= 0; --i) h.push_back(parts[static_cast<size_t>(i)]);
  return h;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << parts[static_cast<size_t>(i)];
  os << ")";
  return os.str();
}

std::vector<Composition> all_compositions(int k, int r) {
  std::vector<Composition> out;
  Composition cur;
  cur.parts.assign(static_cast<size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k - 1) {
      cur.parts[static_cast<size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.parts[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  if (k >= 1) rec(0, r);
  return out;
}

SignedComposition::SignedComposition(Composition b, Mark m) : base(std::move(b)), mark(m) {
  const bool center = base.parts.back() != 0;
  if (center != (mark == Mark::Dot))
    throw InvalidIndex("SignedComposition: mark must be Dot iff lambda_{n+1} != 0");
}

std::string SignedComposition::str() const {
  return base.str() + mark_char(mark);
}

std::vector<SignedComposition> all_signed_compositions(int n, int r) {
  std::vector<SignedComposition> out;
  for (const auto& la : all_compositions(n + 1, r)) {
    if (la.parts.back() != 0) {
      out.emplace_back(la, Mark::Dot);
    } else {
      out.emplace_back(la, Mark::Plus);
      out.emplace_back(la, Mark::Minus);
    }
  }
  return out;
}

// -- parabolic subgroups ------------------------------------------------------

ParabolicSpec ParabolicSpec::typeB(int n, int r, Composition lambda) {
  if (lambda.size() != n + 1 || lambda.sum() != r)
    throw InvalidIndex("ParabolicSpec: lambda not in Lambda(n+1,r)");
  return ParabolicSpec{Ambient::B, n, r, std::move(lambda), Mark::Dot};
}

ParabolicSpec ParabolicSpec::typeD(int n, int r, SignedComposition alpha) {
  if (alpha.base.size() != n + 1 || alpha.base.sum() != r)
    throw InvalidIndex("ParabolicSpec: alpha not in Lambda^D(n,r)");
  return ParabolicSpec{Ambient::D, n, r, std::move(alpha.base), alpha.mark};
}

std::vector<std::vector<int>> ParabolicSpec::blocks() const {
  std::vector<std::vector<int>> bl;
  auto interval = [](int a, int b) {  // [a,b], possibly empty
    std::vector<int> v;
    for (int x = a; x <= b; ++x) v.push_back(x);
    return v;
  };
  const auto ps = lambda.partial_sums();
  auto tilde = [&](int i) { return i == 0 ? 0 : ps[static_cast<size_t>(i - 1)]; };
  if (ambient == Ambient::B || mark == Mark::Dot) {
    // Blocks of hat(lambda) up to the last nonzero part (the center block when
    // lambda_{n+1} != 0 covers [lambda~_n + 1, lambda~_n + 2 lambda_{n+1}]).
    const int m = lambda.max_index();
    for (int i = 1; i <= std::min(m, n); ++i)
      bl.push_back(interval(tilde(i - 1) + 1, tilde(i)));
    if (m == n + 1) bl.push_back(interval(tilde(n) + 1, tilde(n) + 2 * lambda.parts.back()));
  } else {
    const int m = lambda.max_index();
    for (int i = 1; i <= m - 1; ++i) bl.push_back(interval(tilde(i - 1) + 1, tilde(i)));
    if (m >= 1) {
      if (mark == Mark::Plus) {
        bl.push_back(interval(tilde(m - 1) + 1, r));
      } else {
        std::vector<int> last = interval(tilde(m - 1) + 1, r - 1);
        last.push_back(r + 1);
        bl.push_back(last);
      }
    }
  }
  return bl;
}

std::vector<Gen> ParabolicSpec::generators() const {
  std::vector<Gen> out;
  const auto bl = blocks();
  for (Gen g : generator_labels(ambient, r)) {
    const SignedPerm p = SignedPerm::generator(r, g);
    bool stab = true;
    for (const auto& b : bl) {
      std::set<int> s(b.begin(), b.end());
      for (int x : b)
        if (!s.count(p(x))) { stab = false; break; }
      if (!stab) break;
    }
    if (stab) out.push_back(g);
  }
  return out;
}

std::string ParabolicSpec::str() const {
  std::ostringstream os;
  os << (ambient == Ambient::B ? "B" : "D") << lambda.str();
  if (ambient == Ambient::D) os << mark_char(mark);
  return os.str();
}

bool Subgroup::contains(int id) const {
  return std::binary_search(elem_ids.begin(), elem_ids.end(), id);
}

Subgroup enumerate_parabolic_subgroup(const ParabolicSpec& spec, size_t max_size) {
  const WeylGroup& G = WeylGroup::get(spec.ambient, spec.r, max_size);
  Subgroup H;
  H.G = &G;
  H.gen_labels = spec.generators();
  std::vector<int> gen_gi;
  for (Gen g : H.gen_labels) gen_gi.push_back(G.gen_index(g));
  std::vector<char> seen(G.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  size_t count = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    ++count;
    if (count > max_size) throw TooLarge("enumerate_parabolic: budget exceeded");
    H.elem_ids.push_back(cur);
    for (int gi : gen_gi) {
      int nxt = G.right[static_cast<size_t>(cur)][static_cast<size_t>(gi)];
      if (!seen[static_cast<size_t>(nxt)]) {
        seen[static_cast<size_t>(nxt)] = 1;
        queue.push_back(nxt);
      }
    }
  }
  std::sort(H.elem_ids.begin(), H.elem_ids.end());
  return H;
}

std::vector<SignedPerm> enumerate_parabolic(const ParabolicSpec& spec, size_t max_size) {
  Subgroup H = enumerate_parabolic_subgroup(spec, max_size);
  std::vector<SignedPerm> out;
  out.reserve(H.elem_ids.size());
  for (int id : H.elem_ids) out.push_back(H.G->elems[static_cast<size_t>(id)]);
  return out;
}

std::vector<int> double_coset_members(const Subgroup& P1, int w_id, const Subgroup& P2) {
  const WeylGroup& G = *P1.G;
  std::vector<int> g1, g2;
  for (Gen g : P1.gen_labels) g1.push_back(G.gen_index(g));
  for (Gen g : P2.gen_labels) g2.push_back(G.gen_index(g));
  std::vector<int> members;
  std::set<int> seen{w_id};
  std::deque<int> queue{w_id};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    members.push_back(cur);
    for (int gi : g1) {
      int nxt = G.left[static_cast<size_t>(cur)][static_cast<size_t>(gi)];
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
    for (int gi : g2) {
      int nxt = G.right[static_cast<size_t>(cur)][static_cast<size_t>(gi)];
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

int distinguished_rep_in(const Subgroup& P1, int w_id, const Subgroup& P2) {
  const WeylGroup& G = *P1.G;
  auto members = double_coset_members(P1, w_id, P2);
  int best = members.front();
  int count_min = 1;
  for (size_t i = 1; i < members.size(); ++i) {
    int m = members[i];
    if (G.len[static_cast<size_t>(m)] < G.len[static_cast<size_t>(best)]) {
      best = m;
      count_min = 1;
    } else if (G.len[static_cast<size_t>(m)] == G.len[static_cast<size_t>(best)]) {
      ++count_min;
    }
  }
  if (count_min != 1)
    throw NonUniqueMinimum("double coset has no unique minimal-length element");
  return best;
}

DoubleCosetPartition double_cosets(const Subgroup& P1, const Subgroup& P2) {
  const WeylGroup& G = *P1.G;
  DoubleCosetPartition part;
  part.coset_of.assign(G.size(), -1);
  // Ids are in BFS order, hence nondecreasing length: the first unvisited
  // element of a coset is one of its minimal-length members.
  for (size_t seed = 0; seed < G.size(); ++seed) {
    if (part.coset_of[seed] != -1) continue;
    auto members = double_coset_members(P1, static_cast<int>(seed), P2);
    int rep = distinguished_rep_in(P1, static_cast<int>(seed), P2);
    int cid = static_cast<int>(part.rep_ids.size());
    part.rep_ids.push_back(rep);
    for (int m : members) part.coset_of[static_cast<size_t>(m)] = cid;
    part.members.push_back(std::move(members));
  }
  return part;
}

std::vector<SignedPerm> distinguished_reps(const ParabolicSpec& left,
                                           const ParabolicSpec& right,
                                           size_t max_size) {
  if (left.ambient != right.ambient || left.r != right.r)
    throw AmbientMismatch("distinguished_reps: mismatched ambients");
  Subgroup P1 = enumerate_parabolic_subgroup(left, max_size);
  Subgroup P2 = enumerate_parabolic_subgroup(right, max_size);
  auto part = double_cosets(P1, P2);
  std::vector<SignedPerm> reps;
  for (int id : part.rep_ids) reps.push_back(P1.G->elems[static_cast<size_t>(id)]);
  return reps;
}

bool is_min_in_right_coset(const Subgroup& P, int w_id) {
  const WeylGroup& G = *P.G;
  for (Gen g : P.gen_labels) {
    int sid = G.left[static_cast<size_t>(w_id)][static_cast<size_t>(G.gen_index(g))];
    if (G.len[static_cast<size_t>(sid)] < G.len[static_cast<size_t>(w_id)]) return false;
  }
  return true;
}

}  // namespace qschur
