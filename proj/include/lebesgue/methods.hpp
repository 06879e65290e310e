#pragma once

#include "lebesgue/baselines.hpp"
#include "lebesgue/zelic.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace lebesgue {

enum class Method { Zoh, Linear, Nearest, Pchip, ZeLi, ZeLiC, ZeChip, ZeChipC };

inline constexpr std::array kAllMethods{Method::Zoh,  Method::Linear, Method::Nearest,
                                        Method::Pchip, Method::ZeLi,  Method::ZeLiC,
                                        Method::ZeChip, Method::ZeChipC};

/// Lower-case identifier used on the command line.
constexpr std::string_view method_id(Method m) {
  switch (m) {
    case Method::Zoh: return "zoh";
    case Method::Linear: return "linear";
    case Method::Nearest: return "nearest";
    case Method::Pchip: return "pchip";
    case Method::ZeLi: return "zeli";
    case Method::ZeLiC: return "zelic";
    case Method::ZeChip: return "zechip";
    case Method::ZeChipC: return "zechipc";
  }
  return "";
}

/// Name used in reports.
constexpr std::string_view method_display_name(Method m) {
  switch (m) {
    case Method::Zoh: return "ZOH";
    case Method::Linear: return "Linear";
    case Method::Nearest: return "Nearest";
    case Method::Pchip: return "PCHIP";
    case Method::ZeLi: return "ZeLi";
    case Method::ZeLiC: return "ZeLiC";
    case Method::ZeChip: return "ZeChip";
    case Method::ZeChipC: return "ZeChipC";
  }
  return "";
}

inline std::optional<Method> parse_method(std::string_view id) {
  for (auto m : kAllMethods)
    if (method_id(m) == id) return m;
  return std::nullopt;
}

template <typename Scalar>
Reconstruction<Scalar> reconstruct(Method m, const SampledSeries<Scalar>& s,
                                   const ReconstructionParams<Scalar>& params) {
  switch (m) {
    case Method::Zoh: return interp_zoh(s);
    case Method::Linear: return interp_linear(s);
    case Method::Nearest: return interp_nearest(s);
    case Method::Pchip: return interp_pchip(s);
    case Method::ZeLi: return reconstruct_zeli(s, params);
    case Method::ZeLiC: return reconstruct_zelic(s, params);
    case Method::ZeChip: return reconstruct_zechip(s, params);
    case Method::ZeChipC: return reconstruct_zechipc(s, params);
  }
  throw InvalidInput("unknown method");
}

}  // namespace lebesgue
