#include "normlat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "normlat/catalog.hpp"
#include "normlat/char_table.hpp"
#include "normlat/generation.hpp"
#include "normlat/moebius.hpp"

namespace normlat::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json_mode = false;
  double tolerance = 1e-8;
  unsigned cap = 200;
  bool verify = false;
  std::string out_path;
  int max_k = -1;  // generate --k; -1 = class count
};

json mpz_to_json(const mpz_class& v) {
  static const mpz_class kLimit = mpz_class(1) << 53;
  if (v < kLimit && v > -kLimit) return static_cast<int64_t>(v.get_si());
  return v.get_str();
}

std::string fmt_complex(const std::complex<double>& v) {
  double re = v.real(), im = v.imag();
  if (std::abs(re) < 1e-9) re = 0.0;
  if (std::abs(im) < 1e-9) im = 0.0;
  char buf[64];
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.4g", re);
  else
    std::snprintf(buf, sizeof buf, "%.4g%+.4gi", re, im);
  return buf;
}

std::string fmt_members(const Bitset& members, size_t limit = 20) {
  std::ostringstream os;
  os << '{';
  const auto idx = bits_of(members);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i >= limit) {
      os << ",...";
      break;
    }
    if (i) os << ',';
    os << idx[i];
  }
  os << '}';
  return os.str();
}

void write_payload(const std::string& payload, const Options& o, std::ostream& out) {
  out << payload;
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + o.out_path);
    f << payload;
  }
}

// ---- shared computations -------------------------------------------------------

struct FaithfulSumRow {
  unsigned class_index = 0;
  unsigned class_size = 0;
  bool extends_socle = false;
  std::complex<double> pair_sum;
  mpq_class product;
  bool product_matches = false;
  bool divisibility = false;
};

std::vector<FaithfulSumRow> faithful_sum_rows(const Group& g, const SocleDecomposition& dec,
                                       const CharacterTable& ct, double tol) {
  std::vector<FaithfulSumRow> rows;
  const mpz_class sum_squares = faithful_degree_square_sum(ct);
  for (unsigned k = 0; k < ct.classes.size(); ++k) {
    FaithfulSumRow row;
    row.class_index = k;
    row.class_size = ct.classes[k].size();
    row.extends_socle = class_extends_socle(g, ct.classes[k], dec.socle);
    if (row.extends_socle) {
      row.pair_sum = faithful_pair_sum(ct, k, k);
      row.product = faithful_sum_closed_form(g, dec, ct.classes[k]);
      const double predicted = row.product.get_d();
      row.product_matches = std::abs(row.pair_sum - std::complex<double>(predicted)) <= tol;
      row.divisibility = (sum_squares % row.class_size == 0);
    }
    rows.push_back(row);
  }
  return rows;
}

json faithful_sum_json(const std::vector<FaithfulSumRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json item;
    item["classIndex"] = r.class_index;
    item["classSize"] = r.class_size;
    item["extendsSocle"] = r.extends_socle;
    if (r.extends_socle) {
      item["pairSum"] = {r.pair_sum.real(), r.pair_sum.imag()};
      item["product"] = r.product.get_str();
      item["productMatches"] = r.product_matches;
      item["sumSquaresDivisible"] = r.divisibility;
    }
    arr.push_back(item);
  }
  return arr;
}

json socle_json(const SocleDecomposition& dec) {
  json s;
  s["a"] = dec.a;
  s["b"] = dec.b;
  s["order"] = dec.socle.order();
  json abelian = json::array();
  for (const auto& ac : dec.abelian_classes) {
    json item;
    item["order"] = ac.order;
    item["d"] = ac.d;
    item["q"] = ac.q;
    item["componentOrder"] = ac.component.order();
    abelian.push_back(item);
  }
  s["abelian"] = abelian;
  json nab = json::array();
  for (const auto& sg : dec.non_abelian) nab.push_back(sg.order());
  s["nonAbelian"] = nab;
  return s;
}

json moebius_matrix_json(const MoebiusTable& t) {
  json m = json::array();
  for (const auto& row : t.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(mpz_to_json(v));
    m.push_back(r);
  }
  return m;
}

bool tables_agree(const MoebiusTable& a, const MoebiusTable& b,
                  const NormalLattice& lat) {
  for (unsigned i = 0; i < lat.size(); ++i)
    for (unsigned j = 0; j < lat.size(); ++j)
      if (lat.less_equal(i, j) && a.values[i][j] != b.values[i][j]) return false;
  return true;
}

bool table_has_faithful(const CharacterTable& ct) {
  for (const auto& ch : ct.characters)
    if (ch.kernel.order() == 1) return true;
  return false;
}

// Full oracle cross-check suite; throws VerifyMismatch on the first failure.
void verify_group(const Group& g, const NormalLattice& lat, double tol) {
  if (g.order >= 2) {
    const MoebiusTable rec = moebius_recursive(lat);
    const MoebiusTable clo = moebius_closed_table(g, lat);
    if (!tables_agree(rec, clo, lat))
      throw VerifyMismatch("closed-form Moebius values disagree with the recursion");
  }
  const CharacterTable ct = character_table(g, std::max(g.order, 2000u));
  const unsigned r = static_cast<unsigned>(ct.classes.size());
  // Row and column orthogonality.
  for (unsigned i = 0; i < ct.characters.size(); ++i)
    for (unsigned j = i; j < ct.characters.size(); ++j) {
      std::complex<double> acc = 0.0;
      for (unsigned k = 0; k < r; ++k)
        acc += static_cast<double>(ct.classes[k].size()) * ct.value(i, k) *
               std::conj(ct.value(j, k));
      const double expect = (i == j) ? static_cast<double>(g.order) : 0.0;
      if (std::abs(acc - expect) > tol * g.order)
        throw VerifyMismatch("row orthogonality fails");
    }
  for (unsigned c = 0; c < r; ++c)
    for (unsigned d = c; d < r; ++d) {
      std::complex<double> acc = 0.0;
      for (const auto& ch : ct.characters) acc += ch.values[c] * std::conj(ch.values[d]);
      const double expect =
          (c == d) ? static_cast<double>(g.order) / ct.classes[c].size() : 0.0;
      if (std::abs(acc - expect) > tol * g.order)
        throw VerifyMismatch("column orthogonality fails");
    }
  // Kernels are lattice nodes.
  for (const auto& ch : ct.characters)
    if (lat.find(ch.kernel.members) < 0)
      throw VerifyMismatch("character kernel is not a lattice node");
  // Generating-tuple counts: inversion equals the subset-walk count.
  for (unsigned k = 0; k <= r; ++k) {
    const mpz_class direct = f_k_bruteforce(g, lat, lat.nodes[lat.top()], k);
    if (f_k_inversion(g, lat, k) != direct)
      throw VerifyMismatch("generating-tuple count mismatch at k=" + std::to_string(k));
  }
  if (g.order >= 2) {
    const unsigned brute = class_generating_number_bruteforce(g, lat);
    const unsigned structural = class_generating_number_structural(g, lat);
    const unsigned cut = vertical_cut_number(ct, tol);
    if (brute != structural || brute != cut)
      throw VerifyMismatch("class generating number disagrees across methods");
    const SocleDecomposition dec = socle_decomposition(g, lat);
    if (has_faithful_irrep_structural(dec) != table_has_faithful(ct))
      throw VerifyMismatch("faithful-irreducible existence disagrees with the table");
    // Faithful sums: zero across socle-distinct pairs, product formula on the rest.
    std::vector<Bitset> class_mod_socle;
    for (const auto& c : ct.classes)
      class_mod_socle.push_back(product_set(g, c.members, dec.socle.members));
    for (unsigned x = 0; x < r; ++x)
      for (unsigned y = x + 1; y < r; ++y)
        if (class_mod_socle[x] != class_mod_socle[y] &&
            std::abs(faithful_pair_sum(ct, x, y)) > tol)
          throw VerifyMismatch("faithful pair sum nonzero across distinct socle cosets");
    for (const auto& row : faithful_sum_rows(g, dec, ct, tol))
      if (row.extends_socle && (!row.product_matches || !row.divisibility))
        throw VerifyMismatch("faithful diagonal sum disagrees with the product formula");
  }
}

// ---- subcommand emitters -------------------------------------------------------

int do_lattice(const Group& g, const Options& o, std::ostream& out) {
  const NormalLattice lat = enumerate_normal_subgroups(g);
  std::string payload;
  if (o.json_mode) {
    json root;
    root["groupSpec"] = g.name;
    root["order"] = g.order;
    root["nodeCount"] = lat.size();
    json nodes = json::array();
    for (unsigned i = 0; i < lat.size(); ++i) {
      json n;
      n["index"] = i;
      n["order"] = lat.nodes[i].order();
      n["members"] = bits_of(lat.nodes[i].members);
      nodes.push_back(n);
    }
    root["nodes"] = nodes;
    json covers = json::array();
    for (unsigned i = 0; i < lat.size(); ++i) covers.push_back(lat.covers[i]);
    root["covers"] = covers;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "normal subgroup lattice of " << g.name << " (order " << g.order
       << "): " << lat.size() << " nodes\n";
    for (unsigned ri = lat.size(); ri-- > 0;) {
      os << "[" << ri << "] order " << lat.nodes[ri].order() << "  "
         << fmt_members(lat.nodes[ri].members) << "\n";
      os << "  covers:";
      bool any = false;
      for (unsigned below = 0; below < lat.size(); ++below)
        for (unsigned up : lat.covers[below])
          if (up == ri) {
            os << " [" << below << "]";
            any = true;
          }
      if (!any) os << " (none)";
      os << "\n";
    }
    payload = os.str();
  }
  write_payload(payload, o, out);
  return 0;
}

int do_moebius(const Group& g, const Options& o, std::ostream& out, std::ostream& err) {
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const MoebiusTable clo = moebius_closed_table(g, lat);
  const MoebiusTable rec = moebius_recursive(lat);
  const bool match = tables_agree(clo, rec, lat);
  std::string payload;
  if (o.json_mode) {
    json root;
    root["groupSpec"] = g.name;
    root["order"] = g.order;
    json orders = json::array();
    for (const auto& n : lat.nodes) orders.push_back(n.order());
    root["nodeOrders"] = orders;
    root["values"] = moebius_matrix_json(clo);
    root["matchesRecursive"] = match;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "Moebius function on the normal subgroup lattice of " << g.name
       << " (" << lat.size() << " nodes)\n";
    os << "node orders:";
    for (const auto& n : lat.nodes) os << " " << n.order();
    os << "\nmu(row, column); blank where incomparable\n";
    for (unsigned i = 0; i < lat.size(); ++i) {
      for (unsigned j = 0; j < lat.size(); ++j) {
        if (lat.less_equal(i, j))
          os << clo.values[i][j].get_str() << "\t";
        else
          os << ".\t";
      }
      os << "\n";
    }
    os << "closed form matches recursion: " << (match ? "yes" : "NO") << "\n";
    payload = os.str();
  }
  write_payload(payload, o, out);
  if (!match) {
    err << "mismatch: closed-form Moebius table disagrees with the recursion\n";
    return 4;
  }
  return 0;
}

int do_generate(const Group& g, const Options& o, std::ostream& out) {
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const unsigned max_k =
      o.max_k >= 0 ? static_cast<unsigned>(o.max_k)
                   : static_cast<unsigned>(lat.classes.size());
  const GenerationReport rep = generation_report(g, lat, max_k);
  std::string payload;
  if (o.json_mode) {
    json root;
    root["groupSpec"] = g.name;
    root["order"] = g.order;
    root["classCount"] = lat.classes.size();
    root["classGeneratingNumber"] = {
        {"bruteforce", rep.class_generating_number},
        {"structural", class_generating_number_structural(g, lat)}};
    json fk = json::array();
    for (const auto& v : rep.fk) fk.push_back(mpz_to_json(v));
    root["fk"] = fk;
    json majors = json::array();
    for (const auto& [node, cc] : rep.major_subgroups) {
      json m;
      m["nodeIndex"] = node;
      m["order"] = lat.nodes[node].order();
      m["classCount"] = cc;
      majors.push_back(m);
    }
    root["majorSubgroups"] = majors;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "group: " << g.name << " (order " << g.order << ", "
       << lat.classes.size() << " classes)\n";
    os << "class generating number: " << rep.class_generating_number
       << " (structural: " << class_generating_number_structural(g, lat) << ")\n";
    os << "generating k-tuples of distinct classes:\n";
    for (unsigned k = 0; k < rep.fk.size(); ++k)
      os << "  f_" << k << " = " << rep.fk[k].get_str() << "\n";
    os << "subgroups containing the radical (order, classes inside):\n";
    for (const auto& [node, cc] : rep.major_subgroups)
      os << "  node " << node << ": order " << lat.nodes[node].order() << ", "
         << cc << " classes\n";
    payload = os.str();
  }
  write_payload(payload, o, out);
  return 0;
}

int do_chartable(const Group& g, const Options& o, std::ostream& out) {
  const CharacterTable ct = character_table(g, std::max(g.order, 2000u));
  std::string payload;
  if (o.json_mode) {
    json root;
    root["groupSpec"] = g.name;
    root["order"] = g.order;
    json classes = json::array();
    for (unsigned k = 0; k < ct.classes.size(); ++k) {
      json c;
      c["index"] = k;
      c["size"] = ct.classes[k].size();
      c["elementOrder"] = g.element_order(ct.classes[k].representative);
      c["representative"] = g.labels[ct.classes[k].representative];
      classes.push_back(c);
    }
    root["classes"] = classes;
    json chars = json::array();
    for (const auto& ch : ct.characters) {
      json c;
      c["degree"] = ch.degree;
      c["kernelOrder"] = ch.kernel.order();
      json values = json::array();
      for (const auto& v : ch.values) values.push_back({v.real(), v.imag()});
      c["values"] = values;
      chars.push_back(c);
    }
    root["characters"] = chars;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "character table of " << g.name << " (" << ct.classes.size()
       << " classes)\n";
    os << "class sizes:      ";
    for (const auto& c : ct.classes) os << "\t" << c.size();
    os << "\nelement orders:   ";
    for (const auto& c : ct.classes)
      os << "\t" << g.element_order(c.representative);
    os << "\n";
    for (unsigned i = 0; i < ct.characters.size(); ++i) {
      os << "chi_" << i << " (kernel " << ct.characters[i].kernel.order() << "):";
      for (const auto& v : ct.characters[i].values) os << "\t" << fmt_complex(v);
      os << "\n";
    }
    payload = os.str();
  }
  write_payload(payload, o, out);
  return 0;
}

int do_faithful(const Group& g, const Options& o, std::ostream& out) {
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const SocleDecomposition dec = socle_decomposition(g, lat);
  const CharacterTable ct = character_table(g, std::max(g.order, 2000u));
  const auto rows = faithful_sum_rows(g, dec, ct, o.tolerance);
  const mpz_class sum_squares = faithful_degree_square_sum(ct);
  // Largest |sum chi(A) conj(chi(B))| over class pairs distinct modulo the socle.
  double max_off = 0.0;
  std::vector<Bitset> mod_socle;
  for (const auto& c : ct.classes)
    mod_socle.push_back(product_set(g, c.members, dec.socle.members));
  for (unsigned x = 0; x < ct.classes.size(); ++x)
    for (unsigned y = x + 1; y < ct.classes.size(); ++y)
      if (mod_socle[x] != mod_socle[y])
        max_off = std::max(max_off, std::abs(faithful_pair_sum(ct, x, y)));
  std::string payload;
  if (o.json_mode) {
    json root;
    root["groupSpec"] = g.name;
    root["order"] = g.order;
    root["faithfulSumSquares"] = mpz_to_json(sum_squares);
    root["hasFaithfulIrrep"] = {{"structural", has_faithful_irrep_structural(dec)},
                                {"table", table_has_faithful(ct)}};
    root["maxOffDiagonal"] = max_off;
    root["faithfulSums"] = faithful_sum_json(rows);
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "faithful-character analysis of " << g.name << "\n";
    os << "sum of squared degrees over faithful characters: "
       << sum_squares.get_str() << "\n";
    os << "faithful irreducible exists: structural="
       << (has_faithful_irrep_structural(dec) ? "yes" : "no")
       << " table=" << (table_has_faithful(ct) ? "yes" : "no") << "\n";
    os << "max |pair sum| across classes distinct mod socle: " << max_off << "\n";
    os << "classes with |CS| = |C||S|:\n";
    for (const auto& r : rows) {
      if (!r.extends_socle) continue;
      os << "  class " << r.class_index << " (size " << r.class_size
         << "): sum=" << fmt_complex(r.pair_sum) << " product="
         << r.product.get_str() << " matches=" << (r.product_matches ? "yes" : "NO")
         << " divides=" << (r.divisibility ? "yes" : "NO") << "\n";
    }
    payload = os.str();
  }
  write_payload(payload, o, out);
  return 0;
}

int do_analyze(const Group& g, const Options& o, std::ostream& out) {
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const SocleDecomposition dec = socle_decomposition(g, lat);
  const Subgroup rad = radical(lat);
  const MoebiusTable clo = moebius_closed_table(g, lat);
  const CharacterTable ct = character_table(g, std::max(g.order, 2000u));
  const unsigned max_k = static_cast<unsigned>(lat.classes.size());
  const GenerationReport rep = generation_report(g, lat, max_k);
  const unsigned cgn_structural = class_generating_number_structural(g, lat);
  const unsigned cgn_cut = vertical_cut_number(ct, o.tolerance);
  const auto rows = faithful_sum_rows(g, dec, ct, o.tolerance);
  const mpz_class sum_squares = faithful_degree_square_sum(ct);

  std::string payload;
  if (o.json_mode) {
    json root;
    root["groupSpec"] = g.name;
    root["order"] = g.order;
    root["classCount"] = lat.classes.size();
    json orders = json::array();
    for (const auto& n : lat.nodes) orders.push_back(n.order());
    root["lattice"] = {{"nodeCount", lat.size()}, {"nodeOrders", orders}};
    root["radicalOrder"] = rad.order();
    root["socle"] = socle_json(dec);
    root["moebius"] = moebius_matrix_json(clo);
    root["classGeneratingNumber"] = {{"bruteforce", rep.class_generating_number},
                                     {"structural", cgn_structural},
                                     {"verticalCut", cgn_cut}};
    json fk = json::array();
    for (const auto& v : rep.fk) fk.push_back(mpz_to_json(v));
    root["fk"] = fk;
    root["faithfulSumSquares"] = mpz_to_json(sum_squares);
    root["hasFaithfulIrrep"] = {{"structural", has_faithful_irrep_structural(dec)},
                                {"table", table_has_faithful(ct)}};
    root["faithfulSums"] = faithful_sum_json(rows);
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "group: " << g.name << " (order " << g.order << ")\n";
    os << "conjugacy classes: " << lat.classes.size() << "\n";
    os << "normal subgroups: " << lat.size() << ", orders:";
    for (const auto& n : lat.nodes) os << " " << n.order();
    os << "\n";
    os << "radical order: " << rad.order() << "\n";
    os << "socle order: " << dec.socle.order() << " (a=" << dec.a
       << ", b=" << dec.b << ")\n";
    for (unsigned i = 0; i < dec.abelian_classes.size(); ++i) {
      const auto& ac = dec.abelian_classes[i];
      os << "  component " << (i + 1) << ": |A|=" << ac.order << " d=" << ac.d
         << " q=" << ac.q << " (order " << ac.component.order() << ")\n";
    }
    for (const auto& s : dec.non_abelian)
      os << "  non-abelian minimal normal subgroup of order " << s.order() << "\n";
    os << "class generating number: bruteforce=" << rep.class_generating_number
       << " structural=" << cgn_structural << " vertical-cut=" << cgn_cut << "\n";
    os << "generating k-tuples of distinct classes:";
    for (unsigned k = 0; k < rep.fk.size(); ++k)
      os << " f_" << k << "=" << rep.fk[k].get_str();
    os << "\n";
    os << "Moebius values mu(bottom, node):";
    for (unsigned j = 0; j < lat.size(); ++j)
      os << " " << clo.values[lat.bottom()][j].get_str();
    os << "\n";
    os << "mu(node, top):";
    for (unsigned i = 0; i < lat.size(); ++i)
      os << " " << clo.values[i][lat.top()].get_str();
    os << "\n";
    os << "faithful sum of squared degrees: " << sum_squares.get_str() << "\n";
    os << "has faithful irreducible: structural="
       << (has_faithful_irrep_structural(dec) ? "yes" : "no")
       << " table=" << (table_has_faithful(ct) ? "yes" : "no") << "\n";
    os << "classes with |CS| = |C||S|:\n";
    for (const auto& r : rows) {
      if (!r.extends_socle) continue;
      os << "  class " << r.class_index << " (size " << r.class_size
         << "): sum=" << fmt_complex(r.pair_sum) << " product="
         << r.product.get_str() << " matches=" << (r.product_matches ? "yes" : "NO")
         << " divides=" << (r.divisibility ? "yes" : "NO") << "\n";
    }
    payload = os.str();
  }
  write_payload(payload, o, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"normal-subgroup lattice, Moebius, generation, and character analysis"};
  app.require_subcommand(1);

  Options o;
  std::string spec;
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"analyze", "full report: lattice, socle, Moebius, generation, characters"},
      {"lattice", "normal subgroup lattice with Hasse covers"},
      {"moebius", "Moebius table, closed form checked against the recursion"},
      {"generate", "class generating number and generating-tuple counts"},
      {"chartable", "complex irreducible character table with kernels"},
      {"faithful", "faithful-character sums and the product formula"}};
  for (const auto& [name, desc] : subs) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("spec", spec,
                  "group: catalog name (C6, C2^3, S4, A5, D4, Q8, SL23, products "
                  "with x) or perm:(cycles);(cycles)")
        ->required();
    s->add_flag("--json", o.json_mode, "machine-readable output");
    s->add_option("--tolerance", o.tolerance, "numeric comparison tolerance")
        ->check(CLI::PositiveNumber);
    s->add_option("--cap", o.cap, "group order cap")->check(CLI::Range(1, 2000));
    s->add_flag("--verify", o.verify, "run oracle cross-checks; exit 4 on mismatch");
    s->add_option("--out", o.out_path, "also write the report to this file");
    if (name == "generate")
      s->add_option("--k", o.max_k, "largest tuple size to report")
          ->check(CLI::Range(0, 1000));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Group g = group_from_spec(spec, o.cap);
    int code = 0;
    if (cmd == "lattice")
      code = do_lattice(g, o, out);
    else if (cmd == "moebius")
      code = do_moebius(g, o, out, err);
    else if (cmd == "generate")
      code = do_generate(g, o, out);
    else if (cmd == "chartable")
      code = do_chartable(g, o, out);
    else if (cmd == "faithful")
      code = do_faithful(g, o, out);
    else
      code = do_analyze(g, o, out);
    if (o.verify) verify_group(g, enumerate_normal_subgroups(g), o.tolerance);
    return code;
  } catch (const VerifyMismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return 4;
  } catch (const UnknownName& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPermutation& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("normlat");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace normlat::cli
