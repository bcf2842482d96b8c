#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cluster/automorphism_group.hpp"
#include "cluster/exchange_matrix.hpp"
#include "cluster/laurent.hpp"
#include "cluster/mutation_class.hpp"
#include "cluster/parity.hpp"
#include "cluster/seed.hpp"
#include "cluster/valued_quiver.hpp"

namespace cluster::io {

using Json = nlohmann::ordered_json;

/// Either schema. The quiver is present when the input used the quiver form.
struct ParsedInput {
  ExchangeMatrix matrix;
  std::optional<ValuedQuiver> quiver;
};

/// Accepts {"matrix": [[...]]} or {"n", "arrows", "d"?}. Vertices are 1-based.
/// Malformed JSON or a wrong shape throws ParseError; well-formed data that is
/// not a valid quiver or matrix throws InvalidInput / NotSkewSymmetrizable.
ParsedInput parse_input(std::string_view text);
ParsedInput parse_input_json(const Json& j);

/// Integers go out as JSON numbers when they fit in 64 bits, else as strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json matrix_to_json(const ExchangeMatrix& b);
Json quiver_to_json(const ValuedQuiver& q);

/// [{"e":[...],"c":"<decimal>"}] in graded order.
Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, std::size_t variables);

Json seed_to_json(const Seed& s);
Json graph_to_json(const MutationClassGraph& g);
/// Undirected DOT; nodes are seed indices, edges carry the 1-based direction.
std::string graph_to_dot(const MutationClassGraph& g, bool verbose_labels = false);

Json certificate_to_json(const UnreachabilityCertificate& c);
UnreachabilityCertificate certificate_from_json(const Json& j);

Json group_to_json(const GroupTable& g);

}  // namespace cluster::io
