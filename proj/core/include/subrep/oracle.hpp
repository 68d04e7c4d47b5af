#pragma once

#include "subrep/classify.hpp"
#include "subrep/construct.hpp"
#include "subrep/poset.hpp"

#include <optional>
#include <vector>

namespace subrep {

inline constexpr std::size_t default_oracle_limit = 6;
inline constexpr std::size_t enumerate_limit = 5;

// Guard for oracle_subrep: SUBREP_MAX_N when set, else 6.
std::size_t oracle_limit();

// Decides sub-representability straight from the definition, without the
// characterization: a witness g if one exists.
//
// Any valid g must send each subset to an isomorphic subset and must be
// constant on isomorphism classes, so the search picks one representative
// subset per class and backtracks on "embeds iff contained".
std::optional<SubRepMap> oracle_subrep(const Poset& p);
std::optional<SubRepMap> oracle_subrep(const Poset& p, std::size_t limit);

// All posets on n elements up to isomorphism, ordered by canonical code.
std::vector<Poset> enumerate_posets(std::size_t n);

struct SurveyRow {
    CanonicalCode code;
    Poset poset;
    Verdict verdict;
    bool oracle_positive = false;
    bool agrees() const noexcept { return verdict.sub_representable == oracle_positive; }
};

std::vector<SurveyRow> survey(std::size_t n);

} // namespace subrep
