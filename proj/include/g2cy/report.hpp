#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "g2cy/classify.hpp"

namespace g2cy {

// ---------------------------------------------------------------- parsing

/// Parses "(a,b)" (any rank, whitespace tolerated).
inline Weight parse_weight(std::string_view text) {
  std::vector<Int> coords;
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "bad weight '" + std::string(text) + "': " + why);
  };
  skip();
  if (i >= text.size() || text[i] != '(') fail("expected '('");
  ++i;
  for (;;) {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || !std::isdigit(static_cast<unsigned char>(text[i - 1]))) fail("expected integer");
    coords.push_back(std::stoll(std::string(text.substr(start, i - start))));
    skip();
    if (i < text.size() && text[i] == ',') { ++i; continue; }
    if (i < text.size() && text[i] == ')') { ++i; break; }
    fail("expected ',' or ')'");
  }
  skip();
  if (i != text.size()) fail("trailing characters");
  return Weight(std::move(coords));
}

/// Parses "(a,b)[+(c,d)...]"; a summand may carry a multiplicity as "(a,b)^k".
inline std::vector<Weight> parse_summands(std::string_view text) {
  std::vector<Weight> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '+')) ++i;
    if (i == text.size()) break;
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw Error(ErrorCode::Parse, "unterminated weight in '" + std::string(text) + "'");
    const Weight w = parse_weight(text.substr(i, close - i + 1));
    i = close + 1;
    Int mult = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t start = ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw Error(ErrorCode::Parse, "missing multiplicity after '^'");
      mult = std::stoll(std::string(text.substr(start, i - start)));
    }
    for (Int k = 0; k < mult; ++k) out.push_back(w);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "no summands in '" + std::string(text) + "'");
  const auto r = out.front().rank();
  for (const auto& w : out)
    if (w.rank() != r) throw Error(ErrorCode::Parse, "summands of different rank");
  return out;
}

// ---------------------------------------------------------------- rendering

inline std::string label(G2Parabolic p) { return g2_parabolic(p).label(); }

/// Summands in the order given, grouped into runs: "(0,1)^{⊕2} ⊕ (2,0)".
inline std::string render_summands(const std::vector<Weight>& summands) {
  std::string s;
  for (std::size_t i = 0; i < summands.size();) {
    std::size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    if (!s.empty()) s += " ⊕ ";
    s += summands[i].str();
    if (j - i > 1) s += "^{⊕" + std::to_string(j - i) + "}";
    i = j;
  }
  return s;
}

/// A RepSum in canonical order for its parabolic.
inline std::string render_repsum(const LeviData& P, const RepSum& r) {
  if (r.empty()) return "0";
  auto s = r.summands();
  canonical_sort(P, s);
  return render_summands(s);
}

/// "V_(a,b) + 2·V_(c,d)" for a sum of G-modules.
inline std::string render_gmodules(const RepSum& r) {
  std::string s;
  for (const auto& [w, m] : r) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "·";
    s += "V_" + w.str();
  }
  return s.empty() ? "0" : s;
}

inline std::string render_bounds(const DimBounds& b) {
  return b.determined() ? std::to_string(b.lower)
                        : "[" + std::to_string(b.lower) + "," + std::to_string(b.upper) + "]";
}

// ---------------------------------------------------------------- invariant records

enum class Status { Determined, Undetermined, NotApplicable };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Determined: return "determined";
    case Status::Undetermined: return "undetermined";
    case Status::NotApplicable: return "not_applicable";
  }
  return "";
}

inline Status parse_status(std::string_view s) {
  if (s == "determined") return Status::Determined;
  if (s == "undetermined") return Status::Undetermined;
  if (s == "not_applicable") return Status::NotApplicable;
  throw Error(ErrorCode::Parse, "unknown status '" + std::string(s) + "'");
}

/// A computed integer that may be exact, only bounded, or meaningless for the candidate.
struct Quantity {
  Status status = Status::NotApplicable;
  Int lower = 0, upper = 0;

  static Quantity exactly(Int v) { return {Status::Determined, v, v}; }
  static Quantity from(const DimBounds& b) {
    return {b.determined() ? Status::Determined : Status::Undetermined, b.lower, b.upper};
  }
  static Quantity from(const std::optional<DimBounds>& b) { return b ? from(*b) : Quantity{}; }

  bool determined() const { return status == Status::Determined; }
  std::optional<Int> value() const { return determined() ? std::optional<Int>(lower) : std::nullopt; }
  friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct InvariantRecord {
  std::string parabolic;
  std::vector<Weight> summands;
  Int rank = 0;
  Int dim_X = 0;
  Weight det;
  std::vector<Quantity> h0q;
  Quantity h11, h12;
  Int chi_omega1 = 0;
  Quantity deg, c2H, euler;
  std::vector<std::string> discrepancies;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Validates the candidate and computes everything that applies to it. Rows
/// with published invariants are compared, and every mismatch is listed in
/// `discrepancies`.
inline InvariantRecord compute_invariants(G2Parabolic p, std::vector<Weight> summands) {
  const auto& P = g2_parabolic(p);
  const Candidate c = validate_candidate(P, std::move(summands));
  InvariantRecord rec;
  rec.parabolic = P.label();
  rec.summands = c.summands;
  rec.rank = c.rank;
  rec.dim_X = c.dim_X;
  rec.det = c.det;

  const HodgeRecord h = hodge_numbers(c);
  for (const auto& b : h.h0q) rec.h0q.push_back(Quantity::from(b));
  rec.h11 = Quantity::from(h.h11);
  rec.h12 = Quantity::from(h.h12);
  rec.chi_omega1 = h.chi_omega1;
  if (c.dim_X == 3) {
    try {
      rec.euler = Quantity::exactly(euler_number(h));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UndeterminedHodge) throw;
      rec.euler = {Status::Undetermined, mul(2, sub(h.h11->lower, h.h12->upper)), mul(2, sub(h.h11->upper, h.h12->lower))};
    }
    if (P.is_maximal()) {
      const auto fit = degree_and_c2(c);
      rec.deg = Quantity::exactly(fit.deg);
      rec.c2H = Quantity::exactly(fit.c2H);
    }
  }

  for (const auto& ref : reported_invariants()) {
    if (ref.parabolic != p) continue;
    auto s = ref.summands;
    canonical_sort(P, s);
    if (s != rec.summands) continue;
    auto compare = [&](const char* name, const Quantity& q, Int published) {
      if (q.determined() && q.lower != published)
        rec.discrepancies.push_back(std::string(name) + ": computed " + std::to_string(q.lower) + ", published " +
                                    std::to_string(published));
    };
    compare("deg", rec.deg, ref.deg);
    compare("c2H", rec.c2H, ref.c2H);
    compare("h11", rec.h11, ref.h11);
    compare("h12", rec.h12, ref.h12);
  }
  return rec;
}

// ---------------------------------------------------------------- JSON

using nlohmann::json;

inline json quantity_value(const Quantity& q) { return q.determined() ? json(q.lower) : json(nullptr); }

inline json to_json(const InvariantRecord& r) {
  json j;
  j["parabolic"] = r.parabolic;
  j["summands"] = json::array();
  for (const auto& w : r.summands) j["summands"].push_back(w.str());
  j["rank"] = r.rank;
  j["dim_X"] = r.dim_X;
  j["det"] = r.det.str();
  j["h0q"] = json::array();
  for (const auto& q : r.h0q) j["h0q"].push_back(quantity_value(q));
  j["h11"] = quantity_value(r.h11);
  j["h12"] = quantity_value(r.h12);
  j["chi_omega1"] = r.chi_omega1;
  j["deg"] = quantity_value(r.deg);
  j["c2H"] = quantity_value(r.c2H);
  j["euler"] = quantity_value(r.euler);

  json statuses, bounds = json::object();
  auto note = [&](const std::string& name, const Quantity& q) {
    statuses[name] = to_string(q.status);
    if (q.status == Status::Undetermined) bounds[name] = {q.lower, q.upper};
  };
  statuses["h0q"] = json::array();
  for (std::size_t i = 0; i < r.h0q.size(); ++i) {
    statuses["h0q"].push_back(to_string(r.h0q[i].status));
    if (r.h0q[i].status == Status::Undetermined) bounds["h0" + std::to_string(i)] = {r.h0q[i].lower, r.h0q[i].upper};
  }
  note("h11", r.h11);
  note("h12", r.h12);
  note("deg", r.deg);
  note("c2H", r.c2H);
  note("euler", r.euler);
  j["statuses"] = statuses;
  j["bounds"] = bounds;
  j["discrepancies"] = r.discrepancies;
  return j;
}

inline InvariantRecord invariant_record_from_json(const json& j) {
  InvariantRecord r;
  r.parabolic = j.at("parabolic").get<std::string>();
  for (const auto& s : j.at("summands")) r.summands.push_back(parse_weight(s.get<std::string>()));
  r.rank = j.at("rank").get<Int>();
  r.dim_X = j.at("dim_X").get<Int>();
  r.det = parse_weight(j.at("det").get<std::string>());
  const auto& statuses = j.at("statuses");
  const auto& bounds = j.at("bounds");
  auto read = [&](const json& value, std::string_view status, const std::string& bound_key) {
    Quantity q;
    q.status = parse_status(status);
    if (q.status == Status::Determined) q.lower = q.upper = value.get<Int>();
    if (q.status == Status::Undetermined) {
      q.lower = bounds.at(bound_key).at(0).get<Int>();
      q.upper = bounds.at(bound_key).at(1).get<Int>();
    }
    return q;
  };
  const auto& h0q = j.at("h0q");
  for (std::size_t i = 0; i < h0q.size(); ++i)
    r.h0q.push_back(read(h0q[i], statuses.at("h0q").at(i).get<std::string>(), "h0" + std::to_string(i)));
  for (auto [field, name] : {std::pair{&r.h11, "h11"}, {&r.h12, "h12"}, {&r.deg, "deg"}, {&r.c2H, "c2H"}, {&r.euler, "euler"}})
    *field = read(j.at(name), statuses.at(name).get<std::string>(), name);
  r.chi_omega1 = j.at("chi_omega1").get<Int>();
  r.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
  return r;
}

inline json to_json(const CohomologyTable& t) {
  json j = json::array();
  for (Int q : t.degrees()) {
    json row;
    row["degree"] = q;
    row["dim"] = t.total_dim(q);
    row["modules"] = json::array();
    for (const auto& [w, m] : t.modules(q)) row["modules"].push_back({{"highest", w.str()}, {"multiplicity", m}});
    j.push_back(row);
  }
  return j;
}

inline json to_json(const E1Page& page) {
  json j = json::array();
  for (Int k = 0; k <= page.max_k(); ++k)
    for (Int q : page.column(k).degrees()) {
      json e;
      e["k"] = k;
      e["q"] = q;
      e["total_degree"] = q - k;
      e["dim"] = page.dim(k, q);
      e["modules"] = json::array();
      for (const auto& [w, m] : page.column(k).modules(q)) e["modules"].push_back({{"highest", w.str()}, {"multiplicity", m}});
      j.push_back(e);
    }
  return j;
}

inline json to_json(const TableRow& row) {
  json j;
  j["parabolic"] = label(row.parabolic);
  j["summands"] = json::array();
  for (const auto& w : row.summands) j["summands"].push_back(w.str());
  j["split"] = row.split;
  return j;
}

// ---------------------------------------------------------------- text

inline std::string render_cohomology_text(const CohomologyTable& t) {
  std::ostringstream os;
  if (t.empty()) os << "all cohomology vanishes\n";
  for (Int q : t.degrees()) os << "H^" << q << " = " << render_gmodules(t.modules(q)) << ", dim " << t.total_dim(q) << "\n";
  return os.str();
}

/// Grid with rows q (descending) and columns k; entries are dimensions.
inline std::string render_e1_text(const E1Page& page) {
  std::ostringstream os;
  os << "E1 page: entry (k,q) = dim H^q(Lambda^k E^vee (x) W), contributing to degree q-k\n";
  os << "  q\\k";
  for (Int k = 0; k <= page.max_k(); ++k) os << "\t" << k;
  os << "\n";
  for (Int q = page.dim_F(); q >= 0; --q) {
    os << "  " << q;
    for (Int k = 0; k <= page.max_k(); ++k) {
      const Int d = page.dim(k, q);
      os << "\t" << (d ? std::to_string(d) : ".");
    }
    os << "\n";
  }
  return os.str();
}

inline std::string render_invariants_text(const InvariantRecord& r) {
  auto show = [](const Quantity& q) -> std::string {
    switch (q.status) {
      case Status::Determined: return std::to_string(q.lower);
      case Status::Undetermined: return "undetermined in [" + std::to_string(q.lower) + "," + std::to_string(q.upper) + "]";
      case Status::NotApplicable: return "n/a";
    }
    return "";
  };
  std::ostringstream os;
  os << "parabolic: " << r.parabolic << "\n"
     << "E: " << render_summands(r.summands) << "\n"
     << "rank: " << r.rank << "\n"
     << "dim X: " << r.dim_X << "\n"
     << "det E: " << r.det.str() << "\n";
  for (std::size_t q = 0; q < r.h0q.size(); ++q) os << "h^{0," << q << "}: " << show(r.h0q[q]) << "\n";
  os << "h^{1,1}: " << show(r.h11) << "\n"
     << "h^{1,2}: " << show(r.h12) << "\n"
     << "-chi(Omega^1): " << r.chi_omega1 << "\n"
     << "deg: " << show(r.deg) << "\n"
     << "c2.H: " << show(r.c2H) << "\n"
     << "euler: " << show(r.euler) << "\n";
  for (const auto& d : r.discrepancies) os << "DISCREPANCY " << d << "\n";
  return os.str();
}

/// The No. / P / E layout of the published tables.
inline std::string render_rows_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| No. | P | E |\n|---|---|---|\n";
  int n = 0;
  std::optional<G2Parabolic> last;
  for (const auto& row : rows) {
    os << "| " << ++n << " | " << (last == row.parabolic ? "" : label(row.parabolic)) << " | "
       << render_summands(row.summands) << " |\n";
    last = row.parabolic;
  }
  return os.str();
}

inline std::string render_rows_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  int n = 0;
  for (const auto& row : rows)
    os << ++n << "\t" << label(row.parabolic) << "\t" << render_summands(row.summands) << (row.split ? "" : "\t(non-split)")
       << "\n";
  return os.str();
}

}  // namespace g2cy
