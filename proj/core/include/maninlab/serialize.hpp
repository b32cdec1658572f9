#pragma once

#include <istream>
#include <string>

#include <nlohmann/json.hpp>

#include "maninlab/abelian_group.hpp"
#include "maninlab/enumerate.hpp"
#include "maninlab/exponents.hpp"
#include "maninlab/fit.hpp"
#include "maninlab/kac.hpp"
#include "maninlab/local_density.hpp"
#include "maninlab/orbit_finiteness.hpp"
#include "maninlab/polynomial.hpp"
#include "maninlab/variety.hpp"

// JSON forms of the domain types. Integers and rationals travel as decimal
// strings so that values round-trip exactly. Every *_from_json reports
// malformed input as ErrorKind::parse_error.
namespace maninlab {

using Json = nlohmann::json;

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

Json to_json(const InvariantFactors& f);
InvariantFactors invariants_from_json(const Json& j);

Json to_json(const PairDescriptor& p);
PairDescriptor pair_from_json(const Json& j);
Json catalog_to_json(std::span<const PairDescriptor> pairs);
std::vector<PairDescriptor> catalog_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const CatalogReport& r);
CatalogReport report_from_json(const Json& j);

Json to_json(const AffineDiagramChoice& c);
AffineDiagramChoice choice_from_json(const Json& j);

Json to_json(const KacResult& r);
KacResult kac_result_from_json(const Json& j);

Json to_json(const WeightInRootBasis& w);
WeightInRootBasis weight_from_json(const Json& j);

Json to_json(const DivisorData& d);
DivisorData divisor_data_from_json(const Json& j);

Json to_json(const ExponentPair& e);
ExponentPair exponents_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const VarietySpec& v);
VarietySpec variety_from_json(const Json& j);
Json varieties_to_json(std::span<const VarietySpec> vs);
std::vector<VarietySpec> varieties_from_json(const Json& j);

Json to_json(const CountSeries& s);
CountSeries series_from_json(const Json& j);
std::string series_to_csv(const CountSeries& s);
CountSeries series_from_csv(std::istream& in);

Json to_json(const LocalDensity& d);
LocalDensity density_from_json(const Json& j);

Json to_json(const FitResult& f);
FitResult fit_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace maninlab
