#pragma once

#include "knots/homfly.hpp"
#include "knots/laurent.hpp"

#include <map>
#include <string>

namespace knots {

/// Named HOMFLY values loaded from the plain-text fixture format:
/// a name on its own line, then "e_v e_z coeff" lines; '#' starts a comment.
using FixtureTable = std::map<std::string, LaurentPoly2>;

FixtureTable parse_fixtures(const std::string& text);
FixtureTable load_fixtures(const std::string& path);

/// Serializes a table back to the fixture format (stable ordering).
std::string format_fixtures(const FixtureTable& table);

/// True iff the polynomial equals the named fixture or its v -> 1/v image.
/// Throws UnknownFixture when the name is absent.
bool compare_fixture(const HomflyResult& result, const std::string& name,
                     const FixtureTable& table);

}  // namespace knots
