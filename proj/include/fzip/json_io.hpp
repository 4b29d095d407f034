#ifndef FZIP_JSON_IO_HPP
#define FZIP_JSON_IO_HPP

#include "json.hpp"

#include "fzip/forms.hpp"
#include "fzip/oracle.hpp"

namespace fzip {

using Json = nlohmann::json;

Json field_to_json(const FieldRef& f);
FieldRef field_from_json(const Json& j);

Json element_to_json(const FieldParams& f, unsigned idx);
unsigned element_from_json(const FieldParams& f, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldRef& f, unsigned rows, unsigned cols);
Matrix matrix_from_json(const Json& j, const FieldRef& f);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const FieldRef& f);

Json weyl_to_json(const WeylElement& w);
WeylElement weyl_from_json(const Json& j);

Json subset_to_json(const SimpleSubset& s);

Json fzip_to_json(const FZip& z);
FZip fzip_from_json(const Json& j);

Json polarized_to_json(const PolarizedFZip& z);
PolarizedFZip polarized_from_json(const Json& j);
bool json_is_polarized(const Json& j);

Json trace_to_json(const ClassificationTrace& t);
Json orbit_report_to_json(const OrbitReport& r);
Json strata_to_json(const std::vector<EoStratum>& strata);

}  // namespace fzip

#endif
