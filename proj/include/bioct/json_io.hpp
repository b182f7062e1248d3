#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "bioct/composition.hpp"
#include "bioct/errors.hpp"
#include "bioct/jordan.hpp"
#include "bioct/tensor.hpp"
#include "bioct/veronese.hpp"

namespace bioct {

using Json = nlohmann::ordered_json;

/// Malformed input document. what() carries "source:line:column: message".
class InputError : public UsageError {
 public:
  InputError(const std::string& what, std::size_t line, std::size_t column)
      : UsageError(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Parses text, reporting syntax errors with 1-based line and column.
Json parse_document(std::string_view text, std::string_view source = "<input>");
Json read_document(const std::string& path);

// {"table":"O","coeffs":["1/2","-3",...]}
Json to_json(const AlgElement& x);
AlgElement alg_element_from_json(const Json& j);

// {"scalar":"C","oct":"O","z":[["re","im"], ... 8 pairs]}
Json to_json(const TensorElement& b);
TensorElement tensor_from_json(const Json& j);

// {"kind":"complex","scalar":"C","oct":"O","b":[3 elements],"lambda":[3 pairs]}
// The scalar/oct tags of the triple apply to elements that omit them.
Json to_json(const VeroneseTriple& v);
VeroneseTriple triple_from_json(const Json& j);

// {"scalar":"C","oct":"O","conj":"octonionic","metric":[1,1,1],"diag":[3 elements],"b":[3 elements]}
Json to_json(const HermMatrix3& a);
HermMatrix3 matrix_from_json(const Json& j);

Json to_json(const TangentReport& r);

}  // namespace bioct
