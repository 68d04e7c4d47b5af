#include "subrep/oracle.hpp"

#include "subrep/embed.hpp"
#include "subrep/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace subrep {

std::size_t oracle_limit() {
    if (const char* env = std::getenv("SUBREP_MAX_N")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
    }
    return default_oracle_limit;
}

namespace {

struct SubsetClass {
    CanonicalCode code;
    std::vector<Mask> members;  // ascending masks
};

class OracleSearch {
public:
    explicit OracleSearch(const Poset& p) : p_(p) {
        std::map<CanonicalCode, std::vector<Mask>> by_code;
        for (Mask s = 1; s <= p.all(); ++s) {
            by_code[canonical_code(p, s)].push_back(s);
        }
        for (auto& [code, members] : by_code) {
            classes_.push_back({code, std::move(members)});
        }
        // Small classes first; the code starts with the size byte, so a
        // stable sort on size keeps code order within one size.
        std::stable_sort(classes_.begin(), classes_.end(), [](const SubsetClass& a, const SubsetClass& b) {
            return popcount(a.members.front()) < popcount(b.members.front());
        });
        const std::size_t k = classes_.size();
        embeds_.assign(k, std::vector<char>(k, 0));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                embeds_[a][b] = embeds(p, classes_[a].members.front(), classes_[b].members.front()) ? 1 : 0;
            }
        }
        chosen_.assign(k, 0);
    }

    std::optional<SubRepMap> run() {
        if (!search(0)) {
            return std::nullopt;
        }
        SubRepMap g(p_);
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            for (Mask s : classes_[c].members) {
                g.set(s, chosen_[c]);
            }
        }
        return g;
    }

private:
    bool consistent(std::size_t a, Mask candidate) const {
        for (std::size_t b = 0; b < a; ++b) {
            const bool a_in_b = (candidate & ~chosen_[b]) == 0;
            const bool b_in_a = (chosen_[b] & ~candidate) == 0;
            if ((embeds_[a][b] != 0) != a_in_b || (embeds_[b][a] != 0) != b_in_a) {
                return false;
            }
        }
        return true;
    }

    bool search(std::size_t a) {
        if (a == classes_.size()) {
            return true;
        }
        for (Mask candidate : classes_[a].members) {
            if (!consistent(a, candidate)) {
                continue;
            }
            chosen_[a] = candidate;
            if (search(a + 1)) {
                return true;
            }
        }
        return false;
    }

    const Poset& p_;
    std::vector<SubsetClass> classes_;
    std::vector<std::vector<char>> embeds_;
    std::vector<Mask> chosen_;
};

} // namespace

std::optional<SubRepMap> oracle_subrep(const Poset& p, std::size_t limit) {
    if (p.size() > limit || p.size() > canonical_code_limit) {
        throw Error(ErrorCode::TooLarge, "oracle supports at most " + std::to_string(std::min(limit, canonical_code_limit)) +
                                             " elements, got " + std::to_string(p.size()));
    }
    return OracleSearch(p).run();
}

std::optional<SubRepMap> oracle_subrep(const Poset& p) {
    return oracle_subrep(p, oracle_limit());
}

std::vector<Poset> enumerate_posets(std::size_t n) {
    if (n > enumerate_limit) {
        throw Error(ErrorCode::TooLarge, "enumerate_posets supports n <= 5");
    }
    // Every poset has a linear extension, so it suffices to enumerate
    // relations where i < j only for index i < j.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    std::map<CanonicalCode, Poset> found;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots.size()); ++pick) {
        std::vector<Mask> above(n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((pick >> s) & 1U) {
                above[slots[s].first] |= bit(slots[s].second);
            }
        }
        if (!is_strict_order(above)) {
            continue;
        }
        Poset p = Poset::from_relation(std::move(above));
        auto code = canonical_code(p);
        found.try_emplace(std::move(code), std::move(p));
    }
    std::vector<Poset> out;
    for (auto& [code, p] : found) {
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<SurveyRow> survey(std::size_t n) {
    if (n == 0 || n > enumerate_limit) {
        throw Error(ErrorCode::TooLarge, "survey supports 1 <= n <= 5");
    }
    std::vector<SurveyRow> rows;
    for (Poset& p : enumerate_posets(n)) {
        SurveyRow row;
        row.code = canonical_code(p);
        row.verdict = classify_finite(p);
        row.oracle_positive = oracle_subrep(p, std::max(n, oracle_limit())).has_value();
        row.poset = std::move(p);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace subrep
