#pragma once

#include <optional>

#include "cotlar/coxeter.hpp"

// Word-problem back ends. Each returns the ShortLex-least reduced word of the
// element spelled by its input; CoxeterSystem::reduce picks one by system class.
// None of them enforce max_word_len.
namespace cotlar::word_problem {

/// Exhaustive closure under M-operations: delete `ss`, apply braid moves.
/// Works for every Coxeter system; cost grows with the number of reduced
/// expressions of the prefixes involved.
Word closure_reduce(const CoxeterSystem& system, const Word& word);

/// The braid class (all words reachable by type-(b) M-operations) of `word`.
std::vector<Word> braid_class(const CoxeterSystem& system, const Word& word);

/// Shuffle normal form for right-angled systems (all m_st ∈ {2, ∞}).
Word right_angled_reduce(const CoxeterSystem& system, const Word& word);

/// Greedy left-descent stripping driven by the action on the integer root
/// lattice of the system's generalized Cartan matrix. Requires
/// system.is_crystallographic(); returns nullopt on int64 overflow.
std::optional<Word> root_system_reduce(const CoxeterSystem& system, const Word& word);

}  // namespace cotlar::word_problem
