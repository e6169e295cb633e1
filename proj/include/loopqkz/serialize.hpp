#pragma once

#include "loopqkz/fpl.hpp"
#include "loopqkz/report.hpp"
#include "loopqkz/reproduction.hpp"

#include "json.hpp"

namespace loopqkz {

/// {"n": n, "h": "0110...", "v": "..."}; edge strings follow the FplConfig storage order.
nlohmann::json to_json(const FplConfig& c);
/// Throws std::invalid_argument on a malformed object or an invalid configuration.
FplConfig fpl_from_json(const nlohmann::json& j);

/// [{"identity": ..., "ok": ..., "witness": ...}, ...]
nlohmann::json to_json(const Report& r);

nlohmann::json to_json(const CriterionResult& r);

/// A state over the canonical basis as a map encoding -> rendered scalar. Zero
/// entries ("0") are left out, so the map never holds an explicit zero.
nlohmann::json loop_vector_json(const PatternBasis& basis, const std::vector<std::string>& rendered);

}  // namespace loopqkz
