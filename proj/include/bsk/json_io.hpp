#pragma once

// JSON schemas. Integers are decimal strings everywhere so consumers never truncate.
//
//   BSElement      {"num": "3", "pow": 2, "t": "-1"}
//   GroupRingElt   {"k": 2, "terms": [{"coeff": "1", "elt": BSElement}, ...]}
//   IntMatrix      [["1", "0"], ["0", "-1"]]
//   RingMatrix     {"k": 2, "matrix": [[GroupRingElt, ...], ...]}
//   Form           {"k": 2, "matrix": [[...]], "inverse": [[...]]?, "arf": {"mode", "value"}?}
//   Descriptor     {"k": 2, "form": Form, "w2": "I" | "II" | "III", "ks": 0 | 1}
//
// On input, matrix entries may also be human-syntax strings ("1 - a + 2*b*A").
// Reading errors throw SchemaError.

#include "json.hpp"

#include "bsk/hermform.hpp"
#include "bsk/invariants.hpp"

namespace bsk::io {

using nlohmann::json;

json to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const BSElement& g);
BSElement element_from_json(const json& j, GroupParam k);

json to_json(const GroupRingElt& p);
/// Object form, or a human-syntax string interpreted over k.
GroupRingElt ring_from_json(const json& j, GroupParam k);
GroupRingElt ring_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

/// Row arrays of GroupRingElt objects (no k wrapper).
json matrix_rows_to_json(const RingMatrix& m);
RingMatrix matrix_rows_from_json(const json& j, GroupParam k);

json to_json(const RingMatrix& m);
RingMatrix ring_matrix_from_json(const json& j);

json to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const json& j);

json to_json(const ArfProvenance& a);
ArfProvenance arf_from_json(const json& j);

json to_json(const HermitianForm& f);
HermitianForm form_from_json(const json& j);

json to_json(const ManifoldDescriptor& d);
ManifoldDescriptor descriptor_from_json(const json& j);

json to_json(const LGroupTable& t);
json to_json(const Classification& c);
json to_json(const RealizedClass& r);

} // namespace bsk::io
