#pragma once

#include <nlohmann/json.hpp>

#include "autoeq/graded.hpp"
#include "autoeq/lattice.hpp"
#include "autoeq/linalg.hpp"
#include "autoeq/linearized.hpp"
#include "autoeq/symmetric_group.hpp"
#include "autoeq/twist.hpp"

namespace autoeq {

using Json = nlohmann::json;

/// Integers are written as JSON numbers when they fit in 64 bits, otherwise
/// as decimal strings; both forms are accepted on input.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"0": 1, "2": 1}
Json to_json(const GradedDims& g);
GradedDims graded_dims_from_json(const Json& j);

Json to_json(const CycleType& c);
CycleType cycle_type_from_json(const Json& j);

Json to_json(const IntVector& v);
IntVector int_vector_from_json(const Json& j);
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

/// {"gen": "E", "n": 3, "shift": 0, "sign": "+"}; the generator is looked up
/// in the declarations.
Json to_json(const LinBoxObject& a);
LinBoxObject lin_box_object_from_json(const Declarations& decls, const Json& j);

Json to_json(const Letter& l);
Letter letter_from_json(const Json& j);
/// {"text": "...", "letters": [...]}; input may be either form or a bare string.
Json to_json(const FunctorWord& w);
FunctorWord functor_word_from_json(const Json& j);

/// {"rank": 3, "gram": [[...]], "v0": [...], "point": [...]}
Json to_json(const MukaiLattice& l);
MukaiLattice mukai_lattice_from_json(const Json& j);

}  // namespace autoeq
