#pragma once

#include "root_weyl.hpp"
#include "torus.hpp"
#include "vpoly.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace demwhit {

using json = nlohmann::ordered_json;

json vpoly_to_json(const VPoly& p);
VPoly vpoly_from_json(const json& j);
// term list [{"weight": [...], "coeff": {"lo": ..., "coeffs": [...]}}, ...]
// sorted by weight lexicographic ascending
json torusfn_to_json(const TorusFn& f);
TorusFn torusfn_from_json(const json& j, int rank);

struct TableOptions {
  std::string basis = "X";  // X | Y | Z | demazure
  std::optional<std::vector<int>> word;
  std::optional<Rational> v_at;
};

json table_document(const WeylGroup& g, const Weight& lambda, const TableOptions& opt);
json census_document(const WeylGroup& g, const Weight& lambda);
json kl_document(const WeylGroup& g);

// format is one of json | csv | latex; csv and latex are flat projections of
// the same data.
std::string render_document(const json& doc, const std::string& format);

std::string rational_str(const Rational& r);

}  // namespace demwhit
