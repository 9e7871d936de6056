#include "serialize.hpp"

#include "demazure.hpp"
#include "hecke.hpp"
#include "schubert.hpp"
#include "whittaker.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace demwhit {

namespace {

json int_json(const Int& value) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
  return value.str();  // big-integer fallback, documented in the README
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

json weight_json(const Weight& mu) {
  json a = json::array();
  for (long c : mu) a.push_back(c);
  return a;
}

json word_json(const std::vector<int>& word) {
  json a = json::array();
  for (int s : word) a.push_back(s);
  return a;
}

std::string word_text(const std::vector<int>& word, char sep = ' ') {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << sep;
    os << word[k];
  }
  return os.str();
}

std::string word_latex(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << " ";
    os << "s_{" << word[k] << "}";
  }
  return os.str();
}

std::string weight_text(const json& weight, char sep = ' ') {
  std::ostringstream os;
  for (std::size_t k = 0; k < weight.size(); ++k) {
    if (k) os << sep;
    os << weight[k].dump();
  }
  return os.str();
}

json specialized_to_json(const RationalFn& f) {
  json arr = json::array();
  for (const auto& [mu, c] : f) {
    json term;
    term["weight"] = weight_json(mu);
    term["coeff"] = rational_str(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

}  // namespace

std::string rational_str(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

json vpoly_to_json(const VPoly& p) {
  json j;
  j["lo"] = p.lo();
  json coeffs = json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(int_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

VPoly vpoly_from_json(const json& j) {
  long lo = j.at("lo").get<long>();
  VPoly p;
  long e = lo;
  for (const auto& c : j.at("coeffs")) {
    p += VPoly::monomial(e, int_from_json(c));
    ++e;
  }
  return p;
}

json torusfn_to_json(const TorusFn& f) {
  json arr = json::array();
  for (const auto& [mu, c] : f.terms()) {
    json term;
    term["weight"] = weight_json(mu);
    term["coeff"] = vpoly_to_json(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

TorusFn torusfn_from_json(const json& j, int rank) {
  TorusFn f(rank);
  for (const auto& term : j) {
    Weight mu;
    for (const auto& c : term.at("weight")) mu.push_back(c.get<long>());
    f.add_term(mu, vpoly_from_json(term.at("coeff")));
  }
  return f;
}

namespace {

json system_json(const RootSystem& rs) {
  json j;
  j["type"] = std::string(1, rs.type());
  j["rank"] = rs.rank();
  return j;
}

json table_row(const std::vector<int>& word, std::size_t length, const TorusFn& value,
               const std::optional<Rational>& v_at) {
  json row;
  row["w"] = word_json(word);
  row["length"] = length;
  row["value"] = v_at ? specialized_to_json(specialize_v(value, *v_at)) : torusfn_to_json(value);
  return row;
}

}  // namespace

json table_document(const WeylGroup& g, const Weight& lambda, const TableOptions& opt) {
  json doc;
  doc["system"] = system_json(g.rs());
  doc["weight"] = weight_json(lambda);
  json rows = json::array();

  if (opt.basis == "Z" && opt.word) {
    rows.push_back(table_row(*opt.word, opt.word->size(), z_word(g, *opt.word, lambda), opt.v_at));
  } else if (opt.basis == "X" || opt.basis == "Y") {
    WhittakerTable t(g, lambda);
    for (int w = 0; w < g.size(); ++w)
      rows.push_back(table_row(g.reduced_word(w), static_cast<std::size_t>(g.length(w)),
                               opt.basis == "X" ? t.X(w) : t.Y(w), opt.v_at));
  } else if (opt.basis == "Z") {
    for (int w = 0; w < g.size(); ++w)
      rows.push_back(table_row(g.reduced_word(w), static_cast<std::size_t>(g.length(w)),
                               z_word(g, g.reduced_word(w), lambda), opt.v_at));
  } else if (opt.basis == "demazure") {
    for (int w = 0; w < g.size(); ++w)
      rows.push_back(table_row(g.reduced_word(w), static_cast<std::size_t>(g.length(w)),
                               demazure_character(g, w, lambda), opt.v_at));
  } else {
    throw std::invalid_argument("unknown basis '" + opt.basis + "' (expected X, Y, Z or demazure)");
  }
  doc["rows"] = std::move(rows);
  return doc;
}

json census_document(const WeylGroup& g, const Weight& lambda) {
  Census census = census_prime(g);
  json doc;
  doc["system"] = system_json(g.rs());
  doc["weight"] = weight_json(lambda);
  json pairs = json::array();
  for (const CensusEntry& e : census.entries) {
    json p;
    p["w"] = word_json(g.reduced_word(e.w));
    p["s"] = e.s;
    p["length"] = g.length(e.w);
    p["pattern"] = e.pattern;
    json support = json::array();
    for (const auto& [u, value] : e.cprime) {
      json entry;
      entry["u"] = word_json(g.reduced_word(u));
      entry["value"] = value;
      support.push_back(std::move(entry));
    }
    p["cprime"] = std::move(support);
    pairs.push_back(std::move(p));
  }
  doc["pairs"] = std::move(pairs);
  json summary;
  for (const char* key : {"zero", "single", "triple", "other"})
    summary[key] = census.summary.at(key);
  doc["summary"] = std::move(summary);
  json smooth = json::array();
  for (const auto& [w, flag] : smoothness_census(g, lambda)) {
    json row;
    row["w"] = word_json(g.reduced_word(w));
    row["length"] = g.length(w);
    row["smooth"] = flag;
    smooth.push_back(std::move(row));
  }
  doc["smooth"] = std::move(smooth);
  return doc;
}

json kl_document(const WeylGroup& g) {
  KLTable kl = kl_table(g);
  json doc;
  doc["system"] = system_json(g.rs());
  json rows = json::array();
  for (int w = 0; w < g.size(); ++w) {
    json row;
    row["w"] = word_json(g.reduced_word(w));
    row["length"] = g.length(w);
    json polys = json::array();
    for (const auto& [u, p] : kl.D[static_cast<std::size_t>(w)].terms()) {
      json entry;
      entry["u"] = word_json(g.reduced_word(u));
      entry["P"] = vpoly_to_json(p);
      polys.push_back(std::move(entry));
    }
    row["polys"] = std::move(polys);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

namespace {

std::vector<int> word_from_json(const json& j) {
  std::vector<int> word;
  for (const auto& s : j) word.push_back(s.get<int>());
  return word;
}

std::string coeff_text(const json& coeff) {
  if (coeff.is_string()) return coeff.get<std::string>();
  std::ostringstream os;
  os << coeff.at("lo").get<long>() << ";";
  const json& cs = coeff.at("coeffs");
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k) os << " ";
    os << cs[k].dump();
  }
  return os.str();
}

std::string table_csv(const json& doc) {
  std::ostringstream os;
  os << "word,length,weight,coeff\n";
  for (const auto& row : doc.at("rows")) {
    for (const auto& term : row.at("value")) {
      os << word_text(word_from_json(row.at("w"))) << "," << row.at("length").get<long>() << ","
         << weight_text(term.at("weight")) << "," << coeff_text(term.at("coeff")) << "\n";
    }
    if (row.at("value").empty())
      os << word_text(word_from_json(row.at("w"))) << "," << row.at("length").get<long>() << ",,\n";
  }
  return os.str();
}

std::string value_latex(const json& value) {
  if (value.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : value) {
    if (!first) os << " + ";
    first = false;
    if (term.at("coeff").is_string())
      os << term.at("coeff").get<std::string>();
    else
      os << "\\left(" << vpoly_from_json(term.at("coeff")).to_latex() << "\\right)";
    os << " z^{(" << weight_text(term.at("weight"), ',') << ")}";
  }
  return os.str();
}

std::string table_latex(const json& doc) {
  std::ostringstream os;
  for (const auto& row : doc.at("rows")) {
    os << "$" << word_latex(word_from_json(row.at("w"))) << "$ & " << row.at("length").get<long>()
       << " & $" << value_latex(row.at("value")) << "$ \\\\\n";
  }
  return os.str();
}

std::string census_csv(const json& doc) {
  std::ostringstream os;
  os << "word,s,length,pattern,u,value\n";
  for (const auto& p : doc.at("pairs")) {
    std::string head = word_text(word_from_json(p.at("w"))) + "," + std::to_string(p.at("s").get<int>()) +
                       "," + std::to_string(p.at("length").get<int>()) + "," +
                       p.at("pattern").get<std::string>();
    if (p.at("cprime").empty()) {
      os << head << ",,\n";
    } else {
      for (const auto& entry : p.at("cprime"))
        os << head << "," << word_text(word_from_json(entry.at("u"))) << ","
           << entry.at("value").get<long>() << "\n";
    }
  }
  os << "\npattern,count\n";
  for (const auto& [key, n] : doc.at("summary").items()) os << key << "," << n.get<int>() << "\n";
  os << "\nword,length,smooth\n";
  for (const auto& row : doc.at("smooth"))
    os << word_text(word_from_json(row.at("w"))) << "," << row.at("length").get<int>() << ","
       << (row.at("smooth").get<bool>() ? "true" : "false") << "\n";
  return os.str();
}

std::string census_latex(const json& doc) {
  std::ostringstream os;
  for (const auto& p : doc.at("pairs")) {
    os << "$" << word_latex(word_from_json(p.at("w"))) << "$ & $s_{" << p.at("s").get<int>()
       << "}$ & " << p.at("pattern").get<std::string>() << " & $";
    if (p.at("cprime").empty()) {
      os << "\\varnothing";
    } else {
      bool first = true;
      for (const auto& entry : p.at("cprime")) {
        if (!first) os << ",\\; ";
        first = false;
        os << entry.at("value").get<long>() << "\\cdot " << word_latex(word_from_json(entry.at("u")));
      }
    }
    os << "$ \\\\\n";
  }
  return os.str();
}

std::string kl_csv(const json& doc) {
  std::ostringstream os;
  os << "word,u,lo,coeffs\n";
  for (const auto& row : doc.at("rows"))
    for (const auto& entry : row.at("polys")) {
      os << word_text(word_from_json(row.at("w"))) << "," << word_text(word_from_json(entry.at("u")))
         << "," << entry.at("P").at("lo").get<long>() << ",";
      const json& cs = entry.at("P").at("coeffs");
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k) os << " ";
        os << cs[k].dump();
      }
      os << "\n";
    }
  return os.str();
}

std::string kl_latex(const json& doc) {
  std::ostringstream os;
  for (const auto& row : doc.at("rows"))
    for (const auto& entry : row.at("polys"))
      os << "$" << word_latex(word_from_json(row.at("w"))) << "$ & $"
         << word_latex(word_from_json(entry.at("u"))) << "$ & $"
         << vpoly_from_json(entry.at("P")).to_latex() << "$ \\\\\n";
  return os.str();
}

}  // namespace

std::string render_document(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump();
  bool is_census = doc.contains("pairs");
  bool is_kl = !is_census && doc.contains("rows") && !doc.at("rows").empty() &&
               doc.at("rows")[0].contains("polys");
  if (format == "csv") {
    if (is_census) return census_csv(doc);
    return is_kl ? kl_csv(doc) : table_csv(doc);
  }
  if (format == "latex") {
    if (is_census) return census_latex(doc);
    return is_kl ? kl_latex(doc) : table_latex(doc);
  }
  throw std::invalid_argument("unknown format '" + format + "' (expected json, csv or latex)");
}

}  // namespace demwhit
