// Command-line front end for the G2 Calabi-Yau complete intersection engine.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "g2cy/g2cy.hpp"

namespace {

using namespace g2cy;

enum class Format { Text, Markdown, Json };

struct Options {
  std::string format = "text";
  std::optional<unsigned long long> seed;  // accepted and ignored: everything is deterministic
  std::string parabolic;
  std::string summands;
  int dim = 0;
  bool check_paper = false;
  int table = 0;
  std::string coeff = "trivial";
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "md") return Format::Markdown;
  if (s == "json") return Format::Json;
  throw Error(ErrorCode::Parse, "unknown format '" + s + "'");
}

RepSum to_repsum(const std::vector<Weight>& ws) {
  RepSum r;
  for (const auto& w : ws) r.insert(w);
  return r;
}

int cmd_roots(Format fmt) {
  const auto& rs = *g2_root_system();
  const auto order = rs.weyl_group().size();
  if (fmt == Format::Json) {
    json j;
    j["positive_roots"] = json::array();
    for (const auto& r : rs.positive_roots())
      j["positive_roots"].push_back({{"weight", r.weight.str()},
                                     {"simple_coords", r.simple_coords},
                                     {"coroot_coords", r.coroot_coords},
                                     {"length", r.length_class == LengthClass::Long ? "long" : "short"}});
    j["count"] = rs.positive_roots().size();
    j["weyl_order"] = order;
    j["rho"] = rs.weyl_vector().str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "positive roots: " << rs.positive_roots().size() << "\n";
  for (const auto& r : rs.positive_roots()) {
    std::cout << "  " << r.weight.str() << "  simple (" << r.simple_coords[0] << "," << r.simple_coords[1]
              << ")  coroot (" << r.coroot_coords[0] << "," << r.coroot_coords[1] << ")  "
              << (r.length_class == LengthClass::Long ? "long" : "short") << "\n";
  }
  std::cout << "Weyl group order: " << order << "\n"
            << "rho = " << rs.weyl_vector().str() << "\n";
  return 0;
}

int cmd_parabolic(Format fmt, const Options& o) {
  const auto& P = g2_parabolic(parse_g2_parabolic(o.parabolic));
  if (fmt == Format::Json) {
    json j;
    j["parabolic"] = P.label();
    j["crossed"] = json::array();
    for (auto c : P.spec().crossed) j["crossed"].push_back(c + 1);
    j["dim"] = P.dim();
    j["levi_rank"] = P.levi_rank();
    j["tangent"] = json::array();
    for (const auto& [w, m] : P.tangent()) j["tangent"].push_back({{"highest", w.str()}, {"multiplicity", m}});
    j["anticanonical"] = P.anticanonical().str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "parabolic: " << P.label() << "\n"
            << "crossed nodes:";
  for (auto c : P.spec().crossed) std::cout << " " << c + 1;
  std::cout << "\n"
            << "dim G/P: " << P.dim() << "\n"
            << "Levi semisimple rank: " << P.levi_rank() << "\n"
            << "g/p = " << render_repsum(P, P.tangent()) << "\n"
            << "det(g/p) = " << P.anticanonical().str() << "\n";
  return 0;
}

int cmd_bundle(Format fmt, const Options& o) {
  const auto& P = g2_parabolic(parse_g2_parabolic(o.parabolic));
  const RepSum E = to_repsum(parse_summands(o.summands));
  const auto ws = weights(P, E);
  if (fmt == Format::Json) {
    json j;
    j["parabolic"] = P.label();
    j["rank"] = rank(P, E);
    j["det"] = det(P, E).str();
    j["summands"] = json::array();
    for (const auto& [w, m] : E)
      j["summands"].push_back({{"highest", w.str()}, {"multiplicity", m}, {"dim", irrep_dim(P, w)}, {"det", irrep_det(P, w).str()}});
    j["weights"] = json::array();
    for (const auto& [w, m] : ws) j["weights"].push_back({{"weight", w.str()}, {"multiplicity", m}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "E = " << render_repsum(P, E) << " on G/" << P.label() << "\n"
            << "rank: " << rank(P, E) << "\n"
            << "det: " << det(P, E).str() << "\n"
            << "weights:";
  for (const auto& [w, m] : ws) std::cout << " " << w.str() << (m > 1 ? "x" + std::to_string(m) : "");
  std::cout << "\n";
  return 0;
}

int cmd_cohomology(Format fmt, const Options& o) {
  const auto& P = g2_parabolic(parse_g2_parabolic(o.parabolic));
  const auto table = bundle_cohomology(P, to_repsum(parse_summands(o.summands)));
  if (fmt == Format::Json) std::cout << to_json(table).dump(2) << "\n";
  else std::cout << render_cohomology_text(table);
  return 0;
}

int cmd_koszul(Format fmt, const Options& o) {
  const auto& P = g2_parabolic(parse_g2_parabolic(o.parabolic));
  const RepSum E = to_repsum(parse_summands(o.summands));
  RepSum W;
  if (o.coeff == "trivial") W = RepSum::trivial(P.rank());
  else if (o.coeff == "cotangent") W = dual(P, P.tangent());
  else if (o.coeff == "conormal") W = dual(P, E);
  else throw Error(ErrorCode::Parse, "unknown coefficient bundle '" + o.coeff + "'");
  const auto page = e1_page(P, E, W);
  const auto restricted = restricted_cohomology(P, E, W);
  if (fmt == Format::Json) {
    json j;
    j["e1"] = to_json(page);
    j["restricted"] = json::array();
    for (const auto& b : restricted.degrees) j["restricted"].push_back(json{b.lower, b.upper});
    j["euler"] = restricted.euler;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << render_e1_text(page);
  for (std::size_t n = 0; n < restricted.degrees.size(); ++n)
    std::cout << "h^" << n << " = " << render_bounds(restricted.degrees[n]) << "\n";
  std::cout << "euler = " << restricted.euler << "\n";
  return 0;
}

int cmd_invariants(Format fmt, const Options& o) {
  const auto rec = compute_invariants(parse_g2_parabolic(o.parabolic), parse_summands(o.summands));
  if (fmt == Format::Json) std::cout << to_json(rec).dump(2) << "\n";
  else std::cout << render_invariants_text(rec);
  return 0;
}

void print_rows(Format fmt, const std::vector<TableRow>& rows) {
  if (fmt == Format::Json) {
    json j = json::array();
    for (const auto& row : rows) j.push_back(to_json(compute_invariants(row.parabolic, row.summands)));
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Markdown) {
    std::cout << render_rows_markdown(rows);
  } else {
    std::cout << render_rows_text(rows);
  }
}

int cmd_classify(Format fmt, const Options& o) {
  std::optional<G2Parabolic> only;
  if (!o.parabolic.empty()) only = parse_g2_parabolic(o.parabolic);
  if (!o.check_paper) {
    print_rows(fmt, classify(o.dim, only));
    return 0;
  }
  const auto diff = diff_against_paper(o.dim, only);
  if (fmt == Format::Json) {
    json j;
    j["dim_X"] = o.dim;
    for (auto [name, rows] : {std::pair{"matched", &diff.matched}, {"missing", &diff.missing}, {"extra", &diff.extra}}) {
      j[name] = json::array();
      for (const auto& row : *rows) {
        json r = to_json(row);
        if (rows == &diff.extra) r["invariants"] = to_json(compute_invariants(row.parabolic, row.summands));
        j[name].push_back(r);
      }
    }
    std::cout << j.dump(2) << "\n";
  } else {
    print_rows(fmt, diff.matched);
    std::cout << "\nmatched: " << diff.matched.size() << ", missing: " << diff.missing.size()
              << ", extra: " << diff.extra.size() << "\n";
    for (const auto& row : diff.missing)
      std::cout << "MISSING " << label(row.parabolic) << " " << render_summands(row.summands) << "\n";
    for (const auto& row : diff.extra) {
      std::cout << "EXTRA " << label(row.parabolic) << " " << render_summands(row.summands) << "\n";
      std::cout << render_invariants_text(compute_invariants(row.parabolic, row.summands));
    }
  }
  if (!diff.missing.empty()) return 1;
  if (!diff.extra.empty()) return 2;
  return 0;
}

int cmd_table(Format fmt, const Options& o) {
  print_rows(fmt, classify(table_dimension(o.table)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calabi-Yau complete intersections in G2 homogeneous spaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "md", "json"}));
  app.add_option("--seed", o.seed, "Ignored; all computations are deterministic");

  auto* roots = app.add_subcommand("roots", "Positive roots, Weyl group order and rho of G2");
  auto* parabolic = app.add_subcommand("parabolic", "Dimension, tangent representation and anticanonical weight");
  parabolic->add_option("P", o.parabolic, "P1, P2 or B")->required();
  auto* bundle = app.add_subcommand("bundle", "Rank, determinant and weights of a homogeneous bundle");
  bundle->add_option("P", o.parabolic, "P1, P2 or B")->required();
  bundle->add_option("summands", o.summands, "e.g. \"(1,0)+(2,0)\"")->required();
  auto* cohomology = app.add_subcommand("cohomology", "Borel-Weil-Bott cohomology of a homogeneous bundle");
  cohomology->add_option("P", o.parabolic, "P1, P2 or B")->required();
  cohomology->add_option("summands", o.summands)->required();
  auto* koszul = app.add_subcommand("koszul", "E1 page of the Koszul resolution");
  koszul->add_option("P", o.parabolic, "P1, P2 or B")->required();
  koszul->add_option("summands", o.summands)->required();
  koszul->add_option("--coeff", o.coeff, "Coefficient bundle")->check(CLI::IsMember({"trivial", "cotangent", "conormal"}));
  auto* classify_cmd = app.add_subcommand("classify", "Enumerate candidates of a given dimension");
  classify_cmd->add_option("--dim", o.dim, "Dimension of X")->required()->check(CLI::Range(2, 5));
  classify_cmd->add_option("--parabolic", o.parabolic, "Restrict to one parabolic");
  classify_cmd->add_flag("--check-paper", o.check_paper, "Compare against the published tables");
  auto* invariants = app.add_subcommand("invariants", "Hodge numbers, degree and c2 of a candidate");
  invariants->add_option("P", o.parabolic, "P1, P2 or B")->required();
  invariants->add_option("summands", o.summands)->required();
  auto* table = app.add_subcommand("table", "Recompute one of the four tables");
  table->add_option("n", o.table, "Table number")->required()->check(CLI::Range(1, 4));

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "md", "json"}));
    sub->add_option("--seed", o.seed, "Ignored");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const Format fmt = parse_format(o.format);
    if (roots->parsed()) return cmd_roots(fmt);
    if (parabolic->parsed()) return cmd_parabolic(fmt, o);
    if (bundle->parsed()) return cmd_bundle(fmt, o);
    if (cohomology->parsed()) return cmd_cohomology(fmt, o);
    if (koszul->parsed()) return cmd_koszul(fmt, o);
    if (classify_cmd->parsed()) return cmd_classify(fmt, o);
    if (invariants->parsed()) return cmd_invariants(fmt, o);
    if (table->parsed()) return cmd_table(fmt, o);
  } catch (const g2cy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
