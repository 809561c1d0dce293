#pragma once

#include <string_view>

namespace mpfv {

enum class Scheme { FV2, FV4 };

enum class LimiterKind {
  Unlimited,
  BJ,      // Barth-Jespersen: traces bounded by the inclusive face-neighbour means of their cell
  Kuzmin,  // vertex-based: linear corner values bounded by the cells sharing each vertex
  NKMP,    // face traces bounded by the two cells of the face
  N2NMP,   // face traces bounded by N(K) u N(L)
  Global,  // all traces bounded by the field extrema at the start of the step
};

enum class SspScheme { FE, SSP22, SSP33 };

std::string_view to_string(Scheme s);
std::string_view to_string(LimiterKind k);
std::string_view to_string(SspScheme s);
Scheme parse_scheme(std::string_view name);
LimiterKind parse_limiter(std::string_view name);
SspScheme parse_ssp(std::string_view name);

}  // namespace mpfv
