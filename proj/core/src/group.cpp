#include "normlat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "normlat/lattice.hpp"
#include "normlat/numeric.hpp"

namespace normlat {

unsigned Group::power(unsigned x, unsigned long e) const {
  unsigned acc = 0;
  for (unsigned long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

unsigned Group::element_order(unsigned x) const {
  unsigned acc = x, n = 1;
  while (acc != 0) {
    acc = mul(acc, x);
    ++n;
  }
  return n;
}

unsigned Group::exponent() const {
  unsigned long e = 1;
  for (unsigned x = 0; x < order; ++x) e = std::lcm(e, (unsigned long)element_order(x));
  return static_cast<unsigned>(e);
}

bool Group::is_abelian() const {
  for (unsigned x = 0; x < order; ++x)
    for (unsigned y = x + 1; y < order; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

void Group::check_axioms() const {
  if (order == 0 || mul_table.size() != (size_t)order * order ||
      inv.size() != order || labels.size() != order)
    throw InternalInconsistency("group table shape mismatch");
  for (unsigned x = 0; x < order; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw InternalInconsistency("identity is not neutral");
    if (mul(x, inv[x]) != 0 || mul(inv[x], x) != 0)
      throw InternalInconsistency("inverse table wrong");
  }
  for (unsigned x = 0; x < order; ++x)
    for (unsigned y = 0; y < order; ++y)
      for (unsigned z = 0; z < order; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw InternalInconsistency("multiplication not associative");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != order) throw InternalInconsistency("labels not unique");
}

std::vector<unsigned> bits_of(const Bitset& b) {
  std::vector<unsigned> out;
  out.reserve(b.count());
  for (size_t x = b.find_first(); x != Bitset::npos; x = b.find_next(x))
    out.push_back(static_cast<unsigned>(x));
  return out;
}

namespace {

// Fills inv from the multiplication table.
void fill_inverses(Group& g) {
  g.inv.assign(g.order, 0);
  for (unsigned x = 0; x < g.order; ++x) {
    bool found = false;
    for (unsigned y = 0; y < g.order; ++y) {
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
        g.inv[x] = static_cast<uint16_t>(y);
        found = true;
        break;
      }
    }
    if (!found) throw InternalInconsistency("element without inverse");
  }
}

std::string cycle_label(const std::vector<unsigned>& perm) {
  const unsigned n = static_cast<unsigned>(perm.size());
  std::ostringstream os;
  std::vector<bool> seen(n, false);
  bool any = false;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    os << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
      j = perm[j];
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace

Group group_from_permutations(const std::vector<std::vector<unsigned>>& generators,
                              unsigned n_points, unsigned cap) {
  if (n_points == 0) n_points = 1;
  for (const auto& gen : generators) {
    if (gen.size() != n_points) throw InvalidPermutation("generator has wrong point count");
    std::vector<bool> hit(n_points, false);
    for (unsigned img : gen) {
      if (img >= n_points || hit[img]) throw InvalidPermutation("generator is not a bijection");
      hit[img] = true;
    }
  }

  std::vector<unsigned> identity(n_points);
  std::iota(identity.begin(), identity.end(), 0);

  // Orbit of the identity under right-composition by the generators; in a
  // finite setting this closure is exactly the generated group.
  std::vector<std::vector<unsigned>> elems{identity};
  std::map<std::vector<unsigned>, unsigned> index{{identity, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      // apply elems[head] first, then gen
      std::vector<unsigned> prod(n_points);
      for (unsigned i = 0; i < n_points; ++i) prod[i] = gen[elems[head][i]];
      if (index.emplace(prod, (unsigned)elems.size()).second) {
        elems.push_back(std::move(prod));
        if (elems.size() > cap) throw ClosureCapExceeded("permutation closure exceeds cap");
      }
    }
  }

  Group g;
  g.order = static_cast<unsigned>(elems.size());
  g.mul_table.assign((size_t)g.order * g.order, 0);
  g.labels.resize(g.order);
  for (unsigned x = 0; x < g.order; ++x) g.labels[x] = cycle_label(elems[x]);
  std::vector<unsigned> prod(n_points);
  for (unsigned x = 0; x < g.order; ++x) {
    for (unsigned y = 0; y < g.order; ++y) {
      // product xy = apply x first, then y
      for (unsigned i = 0; i < n_points; ++i) prod[i] = elems[y][elems[x][i]];
      auto it = index.find(prod);
      if (it == index.end()) throw InternalInconsistency("closure not closed");
      g.mul_table[(size_t)x * g.order + y] = static_cast<uint16_t>(it->second);
    }
  }
  fill_inverses(g);
  g.name = "perm group of order " + std::to_string(g.order);
  return g;
}

Group direct_product(const Group& a, const Group& b, unsigned cap) {
  const unsigned long n = (unsigned long)a.order * b.order;
  if (n > cap) throw ClosureCapExceeded("direct product exceeds cap");
  Group g;
  g.order = static_cast<unsigned>(n);
  g.mul_table.assign(n * n, 0);
  g.inv.resize(n);
  g.labels.resize(n);
  auto idx = [&](unsigned x, unsigned y) { return x * b.order + y; };
  for (unsigned x1 = 0; x1 < a.order; ++x1)
    for (unsigned y1 = 0; y1 < b.order; ++y1) {
      const unsigned e1 = idx(x1, y1);
      g.inv[e1] = static_cast<uint16_t>(idx(a.inv[x1], b.inv[y1]));
      g.labels[e1] = "(" + a.labels[x1] + "," + b.labels[y1] + ")";
      for (unsigned x2 = 0; x2 < a.order; ++x2)
        for (unsigned y2 = 0; y2 < b.order; ++y2)
          g.mul_table[(size_t)e1 * n + idx(x2, y2)] =
              static_cast<uint16_t>(idx(a.mul(x1, x2), b.mul(y1, y2)));
    }
  g.name = a.name + " x " + b.name;
  return g;
}

std::vector<ConjClass> conjugacy_classes(const Group& g) {
  std::vector<ConjClass> classes;
  Bitset assigned(g.order);
  for (unsigned x = 0; x < g.order; ++x) {
    if (assigned.test(x)) continue;
    ConjClass c;
    c.parent = &g;
    c.members.resize(g.order);
    unsigned rep = x;
    for (unsigned h = 0; h < g.order; ++h) {
      const unsigned y = g.conj(x, h);
      c.members.set(y);
      assigned.set(y);
      rep = std::min(rep, y);
    }
    c.representative = rep;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [&](const ConjClass& a, const ConjClass& b) {
    const unsigned oa = g.element_order(a.representative);
    const unsigned ob = g.element_order(b.representative);
    if (oa != ob) return oa < ob;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return classes;
}

Subgroup center(const Group& g) {
  Subgroup z;
  z.parent = &g;
  z.members.resize(g.order);
  for (unsigned x = 0; x < g.order; ++x) {
    bool central = true;
    for (unsigned y = 0; y < g.order && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.members.set(x);
  }
  return z;
}

std::pair<Group, QuotientMap> quotient(const Group& g, const Subgroup& n) {
  if (!is_subgroup(g, n.members)) throw NotNormal("quotient: not a subgroup");
  if (!is_normal(g, n)) throw NotNormal("quotient: subgroup is not normal");

  // Coset of x is represented by its smallest member; cosets sorted by that
  // representative, so the identity coset (containing 0) is element 0.
  const std::vector<unsigned> nbits = bits_of(n.members);
  std::vector<unsigned> coset_rep(g.order, g.order);
  for (unsigned x = 0; x < g.order; ++x) {
    if (coset_rep[x] != g.order) continue;
    unsigned rep = x;
    std::vector<unsigned> members;
    for (unsigned k : nbits) {
      const unsigned y = g.mul(x, k);
      members.push_back(y);
      rep = std::min(rep, y);
    }
    for (unsigned y : members) coset_rep[y] = rep;
  }
  std::vector<unsigned> reps;
  for (unsigned x = 0; x < g.order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::vector<unsigned> rep_index(g.order, 0);
  for (unsigned i = 0; i < reps.size(); ++i) rep_index[reps[i]] = i;

  Group q;
  q.order = static_cast<unsigned>(reps.size());
  q.mul_table.assign((size_t)q.order * q.order, 0);
  q.labels.resize(q.order);
  for (unsigned i = 0; i < q.order; ++i) {
    q.labels[i] = "[" + g.labels[reps[i]] + "]";
    for (unsigned j = 0; j < q.order; ++j)
      q.mul_table[(size_t)i * q.order + j] =
          static_cast<uint16_t>(rep_index[coset_rep[g.mul(reps[i], reps[j])]]);
  }
  fill_inverses(q);
  q.name = g.name + " / subgroup of order " + std::to_string(n.order());

  QuotientMap map;
  map.element_image.resize(g.order);
  for (unsigned x = 0; x < g.order; ++x)
    map.element_image[x] = static_cast<uint16_t>(rep_index[coset_rep[x]]);
  return {std::move(q), std::move(map)};
}

bool is_simple(const Group& g) {
  if (g.order < 2) throw TrivialGroup("is_simple: |G| must be at least 2");
  for (const ConjClass& c : conjugacy_classes(g)) {
    if (c.representative == 0) continue;
    if (normal_closure(g, bits_of(c.members)).order() != g.order) return false;
  }
  return true;
}

Subgroup trivial_subgroup(const Group& g) {
  Subgroup s;
  s.parent = &g;
  s.members.resize(g.order);
  s.members.set(0);
  return s;
}

Subgroup full_subgroup(const Group& g) {
  Subgroup s;
  s.parent = &g;
  s.members.resize(g.order);
  s.members.set();
  return s;
}

Subgroup generated_subgroup(const Group& g, const std::vector<unsigned>& seed) {
  Subgroup s;
  s.parent = &g;
  s.members.resize(g.order);
  s.members.set(0);
  // Orbit of the identity under right multiplication by the seed; closure under
  // a finite semigroup action from the identity is the generated subgroup.
  std::vector<unsigned> queue{0};
  while (!queue.empty()) {
    const unsigned x = queue.back();
    queue.pop_back();
    for (unsigned gen : seed) {
      const unsigned y = g.mul(x, gen);
      if (!s.members.test(y)) {
        s.members.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

bool is_subgroup(const Group& g, const Bitset& members) {
  if (members.size() != g.order || !members.test(0)) return false;
  const std::vector<unsigned> elems = bits_of(members);
  for (unsigned x : elems) {
    if (!members.test(g.inv[x])) return false;
    for (unsigned y : elems)
      if (!members.test(g.mul(x, y))) return false;
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (unsigned x : bits_of(h.members))
    for (unsigned c = 0; c < g.order; ++c)
      if (!h.members.test(g.conj(x, c))) return false;
  return true;
}

bool is_elementary_abelian(const Group& g, const Subgroup& h, unsigned long& p) {
  const std::vector<unsigned> members = bits_of(h.members);
  if (members.size() < 2) return false;
  p = 0;
  for (unsigned x : members) {
    if (x == 0) continue;
    const unsigned long o = g.element_order(x);
    if (p == 0) p = o;
    if (o != p) return false;
  }
  if (!is_prime(p)) return false;
  for (unsigned x : members)
    for (unsigned y : members)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

Group subgroup_as_group(const Group& g, const Subgroup& h) {
  const std::vector<unsigned> elems = bits_of(h.members);
  std::vector<unsigned> pos(g.order, 0);
  for (unsigned i = 0; i < elems.size(); ++i) pos[elems[i]] = i;

  Group s;
  s.order = static_cast<unsigned>(elems.size());
  s.mul_table.assign((size_t)s.order * s.order, 0);
  s.inv.resize(s.order);
  s.labels.resize(s.order);
  for (unsigned i = 0; i < s.order; ++i) {
    if (!h.members.test(g.inv[elems[i]]))
      throw InternalInconsistency("subgroup_as_group: not inverse-closed");
    s.inv[i] = static_cast<uint16_t>(pos[g.inv[elems[i]]]);
    s.labels[i] = g.labels[elems[i]];
    for (unsigned j = 0; j < s.order; ++j) {
      const unsigned z = g.mul(elems[i], elems[j]);
      if (!h.members.test(z)) throw InternalInconsistency("subgroup_as_group: not closed");
      s.mul_table[(size_t)i * s.order + j] = static_cast<uint16_t>(pos[z]);
    }
  }
  s.name = "subgroup of order " + std::to_string(s.order) + " in " + g.name;
  return s;
}

Subgroup image_subgroup(const Subgroup& h, const QuotientMap& map, const Group& target) {
  Subgroup img;
  img.parent = &target;
  img.members.resize(target.order);
  for (unsigned x : bits_of(h.members)) img.members.set(map.element_image[x]);
  return img;
}

}  // namespace normlat
