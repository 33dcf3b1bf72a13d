#include "qschur/hecke.hpp"

#include <sstream>

namespace qschur {

HeckeParams HeckeParams::standard(const WeylGroup& G) {
  HeckeParams p;
  p.q_of_gen.reserve(G.gens.size());
  for (Gen g : G.gens) {
    if (G.type == Ambient::B && g == G.r)
      p.q_of_gen.push_back(PolyQ(1));
    else
      p.q_of_gen.push_back(PolyQ::q_power(1));
  }
  return p;
}

HeckeElt::HeckeElt(Ambient type, int r)
    : G_(&WeylGroup::get(type, r)), params_(HeckeParams::standard(*G_)) {}

HeckeElt HeckeElt::unit(Ambient type, int r) { return basis_id(type, r, 0); }

HeckeElt HeckeElt::basis(Ambient type, int r, const SignedPerm& w) {
  HeckeElt x(type, r);
  int id = x.G_->id_of(w);
  if (id < 0) throw AmbientMismatch("HeckeElt::basis: element not in ambient group");
  x.terms_.emplace(id, PolyQ(1));
  return x;
}

HeckeElt HeckeElt::basis_id(Ambient type, int r, int elem_id) {
  HeckeElt x(type, r);
  if (elem_id < 0 || static_cast<size_t>(elem_id) >= x.G_->size())
    throw AmbientMismatch("HeckeElt::basis_id: bad id");
  x.terms_.emplace(elem_id, PolyQ(1));
  return x;
}

PolyQ HeckeElt::coefficient(int elem_id) const {
  auto it = terms_.find(elem_id);
  return it == terms_.end() ? PolyQ() : it->second;
}

PolyQ HeckeElt::coefficient(const SignedPerm& w) const {
  int id = G_->id_of(w);
  return id < 0 ? PolyQ() : coefficient(id);
}

void HeckeElt::add_term(int elem_id, const PolyQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(elem_id, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (G_ != o.G_) throw AmbientMismatch("HeckeElt: ambient mismatch");
  for (const auto& [id, c] : o.terms_) add_term(id, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (G_ != o.G_) throw AmbientMismatch("HeckeElt: ambient mismatch");
  for (const auto& [id, c] : o.terms_) add_term(id, -c);
  return *this;
}

HeckeElt HeckeElt::scaled(const PolyQ& c) const {
  HeckeElt out(*this);
  if (c.is_zero()) {
    out.terms_.clear();
    return out;
  }
  for (auto& [id, v] : out.terms_) v *= c;
  return out;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  return G_ == o.G_ && terms_ == o.terms_;
}

HeckeElt HeckeElt::mul_gen(Gen g) const {
  const WeylGroup& G = *G_;
  const int gi = G.gen_index(g);
  const PolyQ& qs = params_.q_of_gen[static_cast<size_t>(gi)];
  const PolyQ qs_minus_1 = qs - PolyQ(1);
  HeckeElt out(G.type, G.r);
  for (const auto& [id, c] : terms_) {
    const int wid = G.right[static_cast<size_t>(id)][static_cast<size_t>(gi)];
    if (G.len[static_cast<size_t>(wid)] > G.len[static_cast<size_t>(id)]) {
      out.add_term(wid, c);
    } else {
      out.add_term(id, c * qs_minus_1);
      out.add_term(wid, c * qs);
    }
  }
  return out;
}

HeckeElt HeckeElt::mul(const HeckeElt& o) const {
  if (G_ != o.G_) throw AmbientMismatch("HeckeElt::mul: ambient mismatch");
  HeckeElt acc(G_->type, G_->r);
  for (const auto& [vid, c] : o.terms_) {
    HeckeElt cur = *this;
    for (Gen g : G_->word_of(vid)) cur = cur.mul_gen(g);
    acc += cur.scaled(c);
  }
  return acc;
}

HeckeElt HeckeElt::tau() const {
  HeckeElt out(G_->type, G_->r);
  for (const auto& [id, c] : terms_) out.add_term(G_->inv[static_cast<size_t>(id)], c);
  return out;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*T" << G_->elems[static_cast<size_t>(id)].str();
    first = false;
  }
  return os.str();
}

HeckeElt subgroup_sum(Ambient type, int r, const Subgroup& H) {
  HeckeElt x(type, r);
  for (int id : H.elem_ids) x.add_term(id, PolyQ(1));
  return x;
}

HeckeElt x_parabolic(const ParabolicSpec& spec, size_t max_size) {
  Subgroup H = enumerate_parabolic_subgroup(spec, max_size);
  return subgroup_sum(spec.ambient, spec.r, H);
}

}  // namespace qschur
