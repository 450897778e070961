#pragma once

// JSON and CSV encodings for the wire formats: Laurent polynomials as
// exponent maps, elements as sorted word/coefficient arrays, basis families
// with transition matrices, character tables, and verification reports.

#include <qshuffle/bases.hpp>
#include <qshuffle/characters.hpp>
#include <qshuffle/oklrsym.hpp>

#include <json.hpp>

#include <string>

namespace qsh {

using json = nlohmann::json;

inline json laurent_to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      j[std::to_string(e)] = static_cast<std::int64_t>(c);
    else
      j[std::to_string(e)] = c.str();
  }
  return j;
}

inline LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int e = std::stoi(it.key());
    if (it.value().is_number_integer())
      p.add_term(e, Int(it.value().get<std::int64_t>()));
    else
      p.add_term(e, Int(it.value().get<std::string>()));
  }
  return p;
}

inline json rational_to_json(const RationalQ& r) {
  if (r.is_laurent()) return laurent_to_json(r.as_laurent());
  return json{{"num", laurent_to_json(r.num())}, {"den", laurent_to_json(r.den())}};
}

template <typename EltT>
json element_terms_to_json(const EltT& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(json{{"word", w.str()}, {"coeff", laurent_to_json(c)}});
  return terms;
}

inline json shuffle_elt_to_json(const ShuffleElt& x) {
  return json{{"weight", x.weight().str()}, {"terms", element_terms_to_json(x)}};
}

inline json theta_elt_to_json(const ThetaElt& x) {
  return json{{"weight", x.weight().str()},
              {"framing", x.framing().lambda.str()},
              {"terms", element_terms_to_json(x)}};
}

inline json rat_elt_to_json(const RatElt& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms) terms.push_back(json{{"word", w.str()}, {"coeff", rational_to_json(c)}});
  return terms;
}

inline json matrix_to_json(const Mat<RationalQ>& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r) row.push_back(v.str());
    rows.push_back(row);
  }
  return rows;
}

inline json matrix_to_json(const Mat<LaurentPoly>& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r) row.push_back(v.str());
    rows.push_back(row);
  }
  return rows;
}

inline json basis_family_to_json(const WeightSpace& ws, BasisKind kind) {
  json words = json::array();
  for (const Word& w : ws.good()) words.push_back(w.str());
  json elements = json::array();
  for (std::size_t i = 0; i < ws.dim(); ++i) elements.push_back(rat_elt_to_json(ws.family(kind)[i]));
  json diags = json::object();
  {
    json scal = json::object();
    for (const auto& [w, c] : ws.diagnostics().bracket_scalars) scal[w.str()] = c.str();
    json units = json::object();
    for (const auto& [w, c] : ws.diagnostics().pbw_units) units[w.str()] = c.str();
    diags["bracket_scalars"] = scal;
    diags["pbw_units"] = units;
  }
  return json{{"kind", basis_kind_name(kind)},
              {"weight", ws.weight().str()},
              {"words", words},
              {"elements", elements},
              {"transitions",
               json{{"lyndon_to_monomial", matrix_to_json(ws.trans_lyndon_monomial())},
                    {"bar_on_pbw", matrix_to_json(ws.trans_bar_pbw())},
                    {"canonical_to_pbw", matrix_to_json(ws.trans_can_pbw())},
                    {"gram_canonical", matrix_to_json(ws.gram_canonical())}}},
              {"diagnostics", diags}};
}

inline json report_to_json(const Report& rep) {
  json arr = json::array();
  for (const auto& e : rep.entries) {
    json j{{"family", e.family}, {"case", e.which}, {"weight_word", e.word}, {"status", e.pass ? "pass" : "fail"}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    arr.push_back(j);
  }
  return arr;
}

inline json char_table_to_json(const CharTable& t) {
  json words = json::array();
  for (const Word& w : t.words) words.push_back(w.str());
  json stds = json::array(), simples = json::array(), costds = json::array();
  for (const auto& x : t.standards) stds.push_back(element_terms_to_json(x));
  for (const auto& x : t.simples) simples.push_back(element_terms_to_json(x));
  for (const auto& x : t.costandards) costds.push_back(element_terms_to_json(x));
  json decomp = json::array();
  for (const auto& row : t.decomp) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    decomp.push_back(r);
  }
  json diags = json::array();
  for (const auto& d : t.costd_diags)
    diags.push_back(json{{"word", d.nu.str()},
                         {"pinned_exponent", d.pinned_exponent},
                         {"grading_exponent", d.grading_exponent}});
  // the simple = dual-canonical comparison: a theorem on symmetric words,
  // only an observation elsewhere
  json agree = json::array();
  WeightSpace ws(t.weight);
  for (const auto& a : measure_dual_canonical(t, ws))
    agree.push_back(json{{"word", a.word.str()}, {"proved", a.proved}, {"agrees", a.agrees}});
  return json{{"weight", t.weight.str()},
              {"words", words},
              {"standards", stds},
              {"costandards", costds},
              {"simples", simples},
              {"decomp", decomp},
              {"costandard_exponent_diagnostics", diags},
              {"dual_canonical_agreement", agree}};
}

/// CSV rows: theta-good words ascending; one simple/standard entry per line.
inline std::string char_table_to_csv(const CharTable& t) {
  std::string out = "word,standard,simple";
  for (const Word& w : t.words) out += ",d[" + w.str() + "]";
  out += "\n";
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    auto render = [](const ThetaElt& x) {
      std::string s;
      for (const auto& [w, c] : x.terms()) {
        if (!s.empty()) s += " ; ";
        s += "(" + w.str() + ") " + c.str();
      }
      return s;
    };
    out += "\"" + t.words[i].str() + "\",\"" + render(t.standards[i]) + "\",\"" + render(t.simples[i]) + "\"";
    for (std::size_t j = 0; j < t.words.size(); ++j) out += ",\"" + t.decomp[i][j].str() + "\"";
    out += "\n";
  }
  return out;
}

inline json dim_report_to_json(const DimReport& r) {
  json words = json::array(), dims = json::array(), at1 = json::array();
  for (const auto& w : r.words) words.push_back(w.str());
  for (const auto& d : r.graded_dims) dims.push_back(d.str());
  for (const auto& d : r.dims_at_one) at1.push_back(d.str());
  return json{{"weight", r.weight.str()},
              {"simples", r.simple_count.str()},
              {"tkpf", r.tkpf_count.str()},
              {"words", words},
              {"graded_dims", dims},
              {"dims_at_q1", at1}};
}

}  // namespace qsh
