#ifndef QROOT_JSON_IO_HPP
#define QROOT_JSON_IO_HPP

#include <json.hpp>

#include "qroot/module_analysis.hpp"

namespace qroot {

/// Insertion-ordered JSON keeps every export byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const LinearOp& op);
Json to_json(const SparseMatrixQ& m);
Json to_json(const SparseVector& v, const SpaceShape& shape);
Json to_json(const Subspace& s);
Json to_json(const SpecializationReport& rep);
Json to_json(const SuiteReport& rep);
Json to_json(const WeightReport& rep);
Json to_json(const DimensionReport& rep);
Json to_json(const IrreducibilityCertificate& cert);

Json params_to_json(const ParamSet& P);
ParamSet params_from_json(const Json& j);
ParamSet load_params(const std::string& path);

/// Serialize with the fixed layout used by every artifact file.
std::string dump_artifact(const Json& j);
void write_artifact(const std::string& path, const Json& body);

}  // namespace qroot

#endif
