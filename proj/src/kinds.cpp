#include "mpfv/kinds.hpp"

#include <stdexcept>
#include <string>

namespace mpfv {

std::string_view to_string(Scheme s) { return s == Scheme::FV2 ? "fv2" : "fv4"; }

std::string_view to_string(LimiterKind k) {
  switch (k) {
    case LimiterKind::Unlimited:
      return "unlimited";
    case LimiterKind::BJ:
      return "bj";
    case LimiterKind::Kuzmin:
      return "kuz";
    case LimiterKind::NKMP:
      return "nk";
    case LimiterKind::N2NMP:
      return "n2n";
    case LimiterKind::Global:
      return "global";
  }
  return "?";
}

std::string_view to_string(SspScheme s) {
  switch (s) {
    case SspScheme::FE:
      return "fe";
    case SspScheme::SSP22:
      return "ssp22";
    case SspScheme::SSP33:
      return "ssp33";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "fv2") return Scheme::FV2;
  if (name == "fv4") return Scheme::FV4;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected fv2 or fv4)");
}

LimiterKind parse_limiter(std::string_view name) {
  for (const auto k : {LimiterKind::Unlimited, LimiterKind::BJ, LimiterKind::Kuzmin, LimiterKind::NKMP,
                       LimiterKind::N2NMP, LimiterKind::Global}) {
    if (name == to_string(k)) return k;
  }
  if (name == "none") return LimiterKind::Unlimited;
  if (name == "kuzmin") return LimiterKind::Kuzmin;
  throw std::invalid_argument("unknown limiter '" + std::string(name) +
                              "' (expected unlimited, bj, kuz, nk, n2n or global)");
}

SspScheme parse_ssp(std::string_view name) {
  for (const auto s : {SspScheme::FE, SspScheme::SSP22, SspScheme::SSP33}) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown time scheme '" + std::string(name) + "' (expected fe, ssp22 or ssp33)");
}

}  // namespace mpfv
