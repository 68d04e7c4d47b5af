#include "subrep/pinboard.hpp"

#include "subrep/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace subrep {

namespace {

void sort_descending(std::vector<PinPair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const PinPair& a, const PinPair& b) { return a.height > b.height; });
}

// Sorts by height and merges equal heights by cardinal sum.
std::vector<PinPair> merged(std::vector<PinPair> pairs) {
    sort_descending(pairs);
    std::vector<PinPair> out;
    for (auto& p : pairs) {
        if (!out.empty() && out.back().height == p.height) {
            out.back().freq = card_sum(out.back().freq, p.freq);
        } else {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::string format_pairs(const std::vector<PinPair>& pairs, bool starred) {
    std::ostringstream os;
    os << (starred ? "copin" : "pin");
    for (const auto& p : pairs) {
        os << " (" << p.height.to_string() << ',' << p.freq.to_string() << ')';
    }
    return os.str();
}

// Sum of the frequencies of all pairs whose height is at least h.
CardinalSym count_at_least(const std::vector<PinPair>& pairs, const OrdinalExpr& h) {
    CardinalSym total = CardinalSym::finite(0);
    for (const auto& p : pairs) {
        if (p.height >= h) {
            total = card_sum(total, p.freq);
        }
    }
    return total;
}

} // namespace

Pinboard Pinboard::make(std::vector<PinPair> pairs, bool starred) {
    for (const auto& p : pairs) {
        if (p.height.is_zero() || p.freq.is_zero()) {
            throw Error(ErrorCode::InvalidPinboard, "heights and frequencies must be positive");
        }
        if (!p.height.is_finite() && p.freq.is_infinite()) {
            throw Error(ErrorCode::InvalidPinboard,
                        "height " + p.height.to_string() + " and frequency " + p.freq.to_string() +
                            " are both infinite");
        }
    }
    Pinboard pb;
    pb.pairs_ = merged(std::move(pairs));
    pb.starred_ = starred;
    return pb;
}

bool Pinboard::is_finite() const noexcept {
    return std::all_of(pairs_.begin(), pairs_.end(),
                       [](const PinPair& p) { return p.height.is_finite() && p.freq.is_finite(); });
}

std::string Pinboard::to_string() const {
    return format_pairs(pairs_, starred_);
}

Pinboard co_dual(const Pinboard& pb) {
    Pinboard out = pb;
    out.starred_ = !pb.starred_;
    return out;
}

Poset pinboard_poset(const Pinboard& pb) {
    if (!pb.is_finite()) {
        throw Error(ErrorCode::InfinitePinboard, pb.to_string() + " has no finite expansion");
    }
    std::uint64_t total = 0;
    for (const auto& p : pb.pairs()) {
        total += p.height.finite_value() * p.freq.value();
        if (total > max_elements) {
            throw Error(ErrorCode::TooLarge, "expansion of " + pb.to_string() + " exceeds 64 elements");
        }
    }
    std::vector<std::string> names;
    std::vector<Mask> above;
    for (std::size_t i = 0; i < pb.pairs().size(); ++i) {
        const auto h = pb.pairs()[i].height.finite_value();
        for (std::uint64_t copy = 0; copy < pb.pairs()[i].freq.value(); ++copy) {
            const std::size_t base = names.size();
            for (std::uint64_t level = 0; level < h; ++level) {
                names.push_back("c" + std::to_string(i) + "_" + std::to_string(copy) + "_" + std::to_string(level));
                Mask up = 0;
                if (pb.starred()) {
                    for (std::uint64_t l = 0; l < level; ++l) {
                        up |= bit(base + l);
                    }
                } else {
                    for (std::uint64_t l = level + 1; l < h; ++l) {
                        up |= bit(base + l);
                    }
                }
                above.push_back(up);
            }
        }
    }
    return Poset::from_relation(std::move(names), std::move(above));
}

SimplePinboard SimplePinboard::make(CardinalSym beta, std::uint64_t n, std::uint64_t m, CardinalSym gamma) {
    if (!beta.is_infinite() || !gamma.is_infinite()) {
        throw Error(ErrorCode::InvalidPinboard, "a simple pinboard needs infinite beta and gamma");
    }
    SimplePinboard s;
    s.beta_ = beta;
    s.n_ = n;
    s.m_ = m;
    s.gamma_ = gamma;
    return s;
}

SimplePinboard SimplePinboard::bounded(std::uint64_t beta, std::uint64_t n, std::uint64_t m, std::uint64_t gamma) {
    if (beta <= m) {
        throw Error(ErrorCode::InvalidPinboard, "bounded host needs beta > m");
    }
    SimplePinboard s;
    s.beta_ = CardinalSym::finite(beta);
    s.n_ = n;
    s.m_ = m;
    s.gamma_ = CardinalSym::finite(gamma);
    return s;
}

CardinalSym SimplePinboard::columns_at_least(const OrdinalExpr& h) const {
    CardinalSym total = CardinalSym::finite(0);
    if (h <= max_height()) {
        total = card_sum(total, CardinalSym::finite(n_));
    }
    if (h <= OrdinalExpr::finite(m_)) {
        total = card_sum(total, gamma_);
    }
    return total;
}

Pinboard SimplePinboard::as_pinboard() const {
    std::vector<PinPair> pairs;
    if (n_ > 0) {
        pairs.push_back({max_height(), CardinalSym::finite(n_)});
    }
    if (m_ > 0 && !gamma_.is_zero()) {
        pairs.push_back({OrdinalExpr::finite(m_), gamma_});
    }
    return Pinboard::make(std::move(pairs));
}

std::string SimplePinboard::to_string() const {
    std::ostringstream os;
    os << "pin (" << beta_.to_string() << ',' << n_ << ") (" << m_ << ',' << gamma_.to_string() << ')';
    return os.str();
}

std::string PinSubset::to_string() const {
    return format_pairs(pairs_, starred_);
}

bool columns_embed(const std::vector<PinPair>& a, const std::vector<PinPair>& b) {
    for (const auto& p : a) {
        if (p.freq.is_zero()) {
            continue;
        }
        if (count_at_least(a, p.height) > count_at_least(b, p.height)) {
            return false;
        }
    }
    return true;
}

PinSubset normalize_subset(const std::vector<PinPair>& raw, const SimplePinboard& host, bool starred) {
    std::vector<PinPair> pairs;
    for (const auto& p : raw) {
        if (!p.height.is_zero() && !p.freq.is_zero()) {
            pairs.push_back(p);
        }
    }
    pairs = merged(std::move(pairs));

    // A column family is redundant when a strictly taller family has
    // infinitely many columns, at least as many as it has.
    std::vector<PinPair> kept;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < i && !absorbed; ++j) {
            absorbed = pairs[j].freq.is_infinite() && pairs[j].freq >= pairs[i].freq;
        }
        if (!absorbed) {
            kept.push_back(pairs[i]);
        }
    }

    for (const auto& p : kept) {
        if (p.height > host.max_height()) {
            throw Error(ErrorCode::DoesNotFit,
                        "height " + p.height.to_string() + " exceeds host height " + host.max_height().to_string());
        }
        if (count_at_least(kept, p.height) > host.columns_at_least(p.height)) {
            throw Error(ErrorCode::DoesNotFit,
                        "too many columns of height >= " + p.height.to_string() + " for " + host.to_string());
        }
    }

    PinSubset y;
    y.pairs_ = std::move(kept);
    y.host_ = host;
    y.starred_ = starred;
    return y;
}

PinSubset co_dual(const PinSubset& y) {
    PinSubset out = y;
    out.starred_ = !y.starred_;
    return out;
}

OrdinalExpr ThetaSegments::run_end(std::size_t i) const {
    return ord_sum(runs_.at(i).start, initial_ordinal(runs_.at(i).count));
}

OrdinalExpr ThetaSegments::prefix_at_least(const OrdinalExpr& h) const {
    OrdinalExpr end;
    for (std::size_t i = 0; i < runs_.size() && runs_[i].height >= h; ++i) {
        end = run_end(i);
    }
    return end;
}

std::vector<std::string> ThetaSegments::describe() const {
    std::vector<std::string> lines;
    const std::string star = starred_ ? "*" : "";
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        const auto& r = runs_[i];
        std::ostringstream os;
        os << r.height.to_string() << star << " of ";
        const std::string s = r.start.to_string();
        if (r.count.is_infinite()) {
            os << "columns lambda(" << (r.start.is_zero() ? "" : s + "+") << "t) for all t < " << r.count.to_string();
        } else if (r.count.value() == 1) {
            os << "column lambda(" << s << ")";
        } else {
            const std::string last = ord_sum(r.start, OrdinalExpr::finite(r.count.value() - 1)).to_string();
            os << "columns lambda(" << s << ")" << (r.count.value() == 2 ? " and " : " .. ") << "lambda(" << last
               << ")";
        }
        lines.push_back(os.str());
    }
    lines.emplace_back("0 otherwise");
    return lines;
}

ThetaSegments theta(const SimplePinboard& host, const PinSubset& y) {
    if (!(y.host() == host)) {
        throw Error(ErrorCode::HostMismatch, y.to_string() + " is not a subset of " + host.to_string());
    }
    // Runs are laid out tallest first from column 0. Since the subset fits,
    // the columns taller than m all land on the host's first n columns.
    ThetaSegments t;
    t.host_ = host;
    t.starred_ = y.starred();
    OrdinalExpr position;
    for (const auto& p : y.pairs()) {
        t.runs_.push_back({p.freq, p.height, position});
        position = ord_sum(position, initial_ordinal(p.freq));
    }
    return t;
}

bool theta_subset(const ThetaSegments& a, const ThetaSegments& b) {
    if (!(a.host() == b.host()) || a.starred() != b.starred()) {
        throw Error(ErrorCode::HostMismatch, "theta images over different hosts");
    }
    // Heights decrease along the column order in both images, so b's
    // columns of height >= h form an initial segment of positions; every
    // run of a must end inside it.
    for (std::size_t i = 0; i < a.runs().size(); ++i) {
        if (a.run_end(i) > b.prefix_at_least(a.runs()[i].height)) {
            return false;
        }
    }
    return true;
}

bool pin_embeds(const PinSubset& y, const PinSubset& y2) {
    if (!(y.host() == y2.host()) || y.starred() != y2.starred()) {
        throw Error(ErrorCode::HostMismatch, "subsets of different hosts");
    }
    return columns_embed(y.pairs(), y2.pairs());
}

std::vector<PinPair> parse_pin_pairs(std::string_view text, bool* starred) {
    std::string_view rest = text;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
        rest.remove_prefix(1);
    }
    bool star = false;
    if (rest.starts_with("copin")) {
        star = true;
        rest.remove_prefix(5);
    } else if (rest.starts_with("pin")) {
        rest.remove_prefix(3);
    }
    std::vector<PinPair> pairs;
    while (true) {
        const auto open = rest.find('(');
        if (open == std::string_view::npos) {
            if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos) {
                throw Error(ErrorCode::Parse, "trailing text in '" + std::string(text) + "'");
            }
            break;
        }
        if (rest.substr(0, open).find_first_not_of(" \t\r\n") != std::string_view::npos) {
            throw Error(ErrorCode::Parse, "unexpected text before '(' in '" + std::string(text) + "'");
        }
        const auto close = rest.find(')', open);
        if (close == std::string_view::npos) {
            throw Error(ErrorCode::Parse, "unbalanced '(' in '" + std::string(text) + "'");
        }
        std::string_view inner = rest.substr(open + 1, close - open - 1);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) {
            throw Error(ErrorCode::Parse, "pair without ',' in '" + std::string(text) + "'");
        }
        pairs.push_back({parse_ordinal(inner.substr(0, comma)), parse_cardinal(inner.substr(comma + 1))});
        rest.remove_prefix(close + 1);
    }
    if (starred) {
        *starred = star;
    }
    return pairs;
}

Pinboard parse_pinboard(std::string_view text) {
    bool star = false;
    auto pairs = parse_pin_pairs(text, &star);
    return Pinboard::make(std::move(pairs), star);
}

SimplePinboard parse_simple_pinboard(std::string_view text) {
    const auto pairs = parse_pin_pairs(text);
    if (pairs.size() != 2) {
        throw Error(ErrorCode::Parse, "a simple pinboard has exactly two pairs: '" + std::string(text) + "'");
    }
    const PinPair* tall = &pairs[0];
    const PinPair* wide = &pairs[1];
    if (tall->height < wide->height) {
        std::swap(tall, wide);
    }
    if (tall->freq.is_infinite() || !wide->height.is_finite()) {
        throw Error(ErrorCode::Parse, "expected {(beta,n),(m,gamma)} in '" + std::string(text) + "'");
    }
    if (!tall->height.is_finite()) {
        // (alephK, n): the height must be an initial ordinal.
        if (tall->height != OrdinalExpr::omega(static_cast<std::uint32_t>(tall->height.leading_index()))) {
            throw Error(ErrorCode::Parse, "beta must be a cardinal in '" + std::string(text) + "'");
        }
        return SimplePinboard::make(cardinality(tall->height), tall->freq.value(), wide->height.finite_value(),
                                    wide->freq);
    }
    if (wide->freq.is_infinite()) {
        throw Error(ErrorCode::Parse, "beta and gamma must both be infinite or both finite");
    }
    return SimplePinboard::bounded(tall->height.finite_value(), tall->freq.value(), wide->height.finite_value(),
                                   wide->freq.value());
}

} // namespace subrep
