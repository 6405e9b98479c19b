#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilring/ring.hpp"

namespace nilring::kernels {

enum class Mode { serial, parallel };

/// First axiom violation found in a table pair, if any. `axiom` names the
/// broken law; `witness` holds the elements involved (unused slots are 0).
struct AxiomIssue {
    std::string axiom;
    std::array<int, 3> witness{0, 0, 0};
};

bool operator==(const AxiomIssue& a, const AxiomIssue& b);

/// Scans the tables for ring-axiom violations. Axioms are checked in a fixed
/// priority order (cheap scans first, then the cubic laws); within an axiom
/// the lexicographically first witness is reported. Serial and parallel
/// modes return identical results.
std::optional<AxiomIssue> find_axiom_violation(const TableView& t, Mode mode);

std::optional<AxiomIssue> find_axiom_violation_serial(const TableView& t);
std::optional<AxiomIssue> find_axiom_violation_parallel(const TableView& t);

/// mask[a] = 1 iff a^k = 0 for some k >= 1. Requires valid tables.
std::vector<std::uint8_t> element_nilpotency_mask(const TableView& t, Mode mode);

std::vector<std::uint8_t> element_nilpotency_mask_serial(const TableView& t);
std::vector<std::uint8_t> element_nilpotency_mask_parallel(const TableView& t);

/// True iff mul is commutative.
bool tables_commutative(const TableView& t, Mode mode);

}  // namespace nilring::kernels
