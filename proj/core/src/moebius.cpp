#include "normlat/moebius.hpp"

namespace normlat {

const mpz_class& MoebiusTable::mu(unsigned i, unsigned j) const {
  if (!lattice->less_equal(i, j))
    throw NotComparable("mu(i,j) requires i <= j in the lattice order");
  return values[i][j];
}

MoebiusTable moebius_recursive(const NormalLattice& lat) {
  const unsigned m = lat.size();
  MoebiusTable t;
  t.lattice = &lat;
  t.values.assign(m, std::vector<mpz_class>(m, 0));
  // Node order is a linear extension of inclusion, so all strictly smaller
  // nodes are processed before their upper bounds.
  for (unsigned x = 0; x < m; ++x) {
    t.values[x][x] = 1;
    for (unsigned y = x + 1; y < m; ++y) {
      if (!lat.less_equal(x, y)) continue;
      mpz_class acc = 0;
      for (unsigned z = x; z < y; ++z)
        if (lat.less_equal(x, z) && lat.less_equal(z, y)) acc += t.values[x][z];
      t.values[x][y] = -acc;
    }
  }
  return t;
}

mpz_class mu_one_semisimple(const Group& g, const NormalLattice& lat) {
  const auto [simples, abelians] = simple_factor_decomposition(g, lat);
  unsigned long s_total = 0;
  for (const SimpleFactor& f : simples) s_total += f.multiplicity;
  mpz_class out = (s_total % 2 == 0) ? 1 : -1;
  for (const AbelianFactor& f : abelians) {
    out *= pow_ui(f.prime, choose2(f.exponent));
    if (f.exponent % 2 == 1) out = -out;
  }
  return out;
}

mpz_class mu_one_semisimple(const Group& g) {
  const NormalLattice lat = enumerate_normal_subgroups(g);
  return mu_one_semisimple(g, lat);
}

namespace {

// Closed-form mu(1, T) inside the given group, from its socle decomposition.
mpz_class mu_one_to(const Group& g, const SocleDecomposition& dec, const Subgroup& t) {
  if (t.order() == 1) return 1;
  if (!t.members.is_subset_of(dec.socle.members)) return 0;

  mpz_class out = 1;
  unsigned long sign_flips = 0;
  mpz_class order_check = 1;
  for (const auto& ac : dec.abelian_classes) {
    const Bitset inter = t.members & ac.component.members;
    const size_t n = inter.count();
    unsigned alpha = 0;
    mpz_class acc = 1;
    while (acc < (long)n) {
      acc *= (long)ac.order;
      ++alpha;
    }
    if (acc != (long)n)
      throw InternalInconsistency("socle intersection is not a power of |A_i|");
    sign_flips += alpha;
    out *= pow_ui(ac.q, choose2(alpha));
    order_check *= acc;
  }
  for (const Subgroup& s : dec.non_abelian) {
    if (s.members.is_subset_of(t.members)) {
      sign_flips += 1;
      order_check *= s.order();
    }
  }
  if (order_check != (long)t.order())
    throw InternalInconsistency("normal subgroup of the socle does not factor over components");
  if (sign_flips % 2 == 1) out = -out;
  return out;
}

}  // namespace

mpz_class moebius_closed(const Group& g, const NormalLattice& lat,
                         const SocleDecomposition& dec, const Subgroup& h,
                         const Subgroup& t) {
  const unsigned hi = lat.index_of(h);
  const unsigned ti = lat.index_of(t);
  if (!lat.less_equal(hi, ti)) throw NotComparable("moebius_closed requires h <= t");
  if (hi == ti) return 1;
  if (hi == lat.bottom()) return mu_one_to(g, dec, t);
  // Work in G/H via the correspondence theorem.
  const auto [q, map] = quotient(g, h);
  const NormalLattice qlat = enumerate_normal_subgroups(q);
  const SocleDecomposition qdec = socle_decomposition(q, qlat);
  return mu_one_to(q, qdec, image_subgroup(t, map, q));
}

MoebiusTable moebius_closed_table(const Group& g, const NormalLattice& lat) {
  if (g.order < 2) throw TrivialGroup("closed-form table needs |G| >= 2");
  const unsigned m = lat.size();
  MoebiusTable tbl;
  tbl.lattice = &lat;
  tbl.values.assign(m, std::vector<mpz_class>(m, 0));

  const SocleDecomposition dec = socle_decomposition(g, lat);
  for (unsigned h = 0; h < m; ++h) {
    if (h == lat.bottom()) {
      for (unsigned t = 0; t < m; ++t)
        if (lat.less_equal(h, t)) tbl.values[h][t] = mu_one_to(g, dec, lat.nodes[t]);
      continue;
    }
    if (h == lat.top()) {
      tbl.values[h][h] = 1;
      continue;
    }
    const auto [q, map] = quotient(g, lat.nodes[h]);
    const NormalLattice qlat = enumerate_normal_subgroups(q);
    const SocleDecomposition qdec = socle_decomposition(q, qlat);
    for (unsigned t = 0; t < m; ++t)
      if (lat.less_equal(h, t))
        tbl.values[h][t] = mu_one_to(q, qdec, image_subgroup(lat.nodes[t], map, q));
  }
  return tbl;
}

}  // namespace normlat
