#include "cli/formats.hpp"

#include <subrep/embed.hpp>
#include <subrep/errors.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace subrep::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) {
        out.push_back(tok);
    }
    return out;
}

// Content lines with comments stripped, paired with 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t lineno = 0;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto t = trim(line);
        if (!t.empty()) {
            out.emplace_back(lineno, std::string(t));
        }
    }
    return out;
}

bool looks_like_poset(const std::vector<std::pair<std::size_t, std::string>>& lines) {
    return std::any_of(lines.begin(), lines.end(), [](const auto& l) {
        return l.second.rfind("elem", 0) == 0 || l.second.find('<') != std::string::npos;
    });
}

} // namespace

Poset parse_poset_text(std::string_view text) {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [lineno, line] : content_lines(text)) {
        auto fail = [&, lineno = lineno, &line = line](const std::string& why) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
        };
        auto tokens = split_ws(line);
        if (tokens.front() == "elem") {
            if (tokens.size() == 1) {
                fail("elem without names");
            }
            elements.insert(elements.end(), tokens.begin() + 1, tokens.end());
            continue;
        }
        // a < b < c
        std::vector<std::string> chain;
        std::string_view rest = line;
        while (true) {
            const auto lt = rest.find('<');
            auto name = trim(rest.substr(0, lt));
            if (name.empty() || name.find_first_of(" \t") != std::string_view::npos) {
                fail("expected 'a < b'");
            }
            chain.emplace_back(name);
            if (lt == std::string_view::npos) {
                break;
            }
            rest = rest.substr(lt + 1);
        }
        if (chain.size() < 2) {
            fail("expected 'a < b'");
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            covers.emplace_back(chain[i], chain[i + 1]);
        }
    }
    return poset_from_cover(elements, covers);
}

PosetDescriptor parse_descriptor_text(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw Error(ErrorCode::Parse, "empty input");
    }
    if (looks_like_poset(lines)) {
        return parse_poset_text(text);
    }
    if (lines.size() != 1) {
        throw Error(ErrorCode::Parse, "a descriptor is a single line");
    }
    const std::string& line = lines.front().second;
    const auto tokens = split_ws(line);
    const std::string& head = tokens.front();
    if (head == "pin" || head == "copin") {
        Pinboard pb = parse_pinboard(line);
        if (pb.starred()) {
            return CoPinboardPosetDesc{std::move(pb)};
        }
        return PinboardPosetDesc{std::move(pb)};
    }
    if (head == "flower" || head == "coflower") {
        if (tokens.size() != 3) {
            throw Error(ErrorCode::Parse, head + " takes an ordinal and a cardinal: '" + line + "'");
        }
        auto chain = parse_ordinal(tokens[1]);
        auto width = parse_cardinal(tokens[2]);
        if (head == "flower") {
            return FlowerDesc{std::move(chain), width};
        }
        return CoFlowerDesc{std::move(chain), width};
    }
    if (head == "chain") {
        if (tokens.size() < 2) {
            throw Error(ErrorCode::Parse, "chain needs a type: '" + line + "'");
        }
        const std::string& kind = tokens[1];
        if (kind == "finite" && tokens.size() == 3) {
            auto o = parse_ordinal(tokens[2]);
            if (!o.is_finite()) {
                throw Error(ErrorCode::Parse, "finite chain with infinite length: '" + line + "'");
            }
            return ChainDescriptor{FiniteChain{o.finite_value()}};
        }
        if (kind == "wellordered" && tokens.size() == 3) {
            return ChainDescriptor{WellOrderedChain{parse_ordinal(tokens[2])}};
        }
        if (kind == "wellordered*" && tokens.size() == 3) {
            return ChainDescriptor{WellOrderedStarChain{parse_ordinal(tokens[2])}};
        }
        std::string tag;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            tag += (i > 1 ? " " : "") + tokens[i];
        }
        return ChainDescriptor{UnboundedChain{tag}};
    }
    throw Error(ErrorCode::Parse, "unrecognized descriptor: '" + line + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string file_or_literal(const std::string& arg) {
    std::ifstream in(arg, std::ios::binary);
    if (in) {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;
}

std::vector<std::string> names_of(const Poset& p, Mask m) {
    std::vector<std::string> out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(p.name(i)); });
    return out;
}

nlohmann::json verdict_to_json(const Poset* p, const Verdict& v) {
    using nlohmann::json;
    json j;
    j["kind"] = std::string(verdict_kind_name(v.kind));
    j["subRepresentable"] = v.sub_representable;
    auto name = [&](std::size_t i) { return p ? p->name(i) : std::to_string(i); };
    j["witness"] = std::visit(
        [&](const auto& w) -> json {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, FlowerCenter>) {
                return {{"type", "center"}, {"element", name(w.element)}};
            } else if constexpr (std::is_same_v<T, ChainList>) {
                json chains = json::array();
                for (Mask c : w.chains) {
                    json names = json::array();
                    for_each_bit(c, [&](std::size_t i) { names.push_back(name(i)); });
                    chains.push_back(std::move(names));
                }
                return {{"type", "chains"}, {"chains", std::move(chains)}};
            } else if constexpr (std::is_same_v<T, Obstruction>) {
                json patterns = json::array();
                for (const auto& m : w.matches) {
                    const Poset& pat = pattern(m.kind);
                    json emb = json::object();
                    for (std::size_t i = 0; i < m.embedding.size(); ++i) {
                        emb[pat.name(i)] = name(m.embedding[i]);
                    }
                    patterns.push_back({{"pattern", std::string(pattern_name(m.kind))}, {"embedding", std::move(emb)}});
                }
                return {{"type", "patterns"}, {"patterns", std::move(patterns)}};
            } else {
                return {{"type", "reason"}, {"text", w.text}};
            }
        },
        v.witness);
    return j;
}

Verdict verdict_from_json(const nlohmann::json& j, const Poset* p) {
    Verdict v;
    auto kind = verdict_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) {
        throw Error(ErrorCode::Parse, "unknown verdict kind");
    }
    v.kind = *kind;
    v.sub_representable = j.at("subRepresentable").get<bool>();
    auto index = [&](const std::string& name) -> std::size_t {
        return p ? p->index_of(name) : static_cast<std::size_t>(std::stoul(name));
    };
    const auto& w = j.at("witness");
    if (w.is_null()) {
        return v;
    }
    const auto type = w.at("type").get<std::string>();
    if (type == "center") {
        v.witness = FlowerCenter{index(w.at("element").get<std::string>())};
    } else if (type == "chains") {
        ChainList list;
        for (const auto& c : w.at("chains")) {
            Mask m = 0;
            for (const auto& n : c) {
                m |= bit(index(n.get<std::string>()));
            }
            list.chains.push_back(m);
        }
        v.witness = std::move(list);
    } else if (type == "patterns") {
        Obstruction o;
        for (const auto& entry : w.at("patterns")) {
            auto k = pattern_from_name(entry.at("pattern").get<std::string>());
            if (!k) {
                throw Error(ErrorCode::Parse, "unknown pattern");
            }
            const Poset& pat = pattern(*k);
            PatternMatch m{*k, Embedding(pat.size())};
            for (std::size_t i = 0; i < pat.size(); ++i) {
                m.embedding[i] = index(entry.at("embedding").at(pat.name(i)).get<std::string>());
            }
            o.matches.push_back(std::move(m));
        }
        v.witness = std::move(o);
    } else if (type == "reason") {
        v.witness = Reason{w.at("text").get<std::string>()};
    } else {
        throw Error(ErrorCode::Parse, "unknown witness type " + type);
    }
    return v;
}

nlohmann::json g_to_json(const SubRepMap& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [s, img] : g.table()) {
        rows.push_back({{"subset", names_of(g.parent(), s)}, {"image", names_of(g.parent(), img)}});
    }
    return rows;
}

std::string g_table_text(const SubRepMap& g) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t w = std::string("subset").size();
    for (const auto& [s, img] : g.table()) {
        rows.emplace_back(g.parent().format_set(s), g.parent().format_set(img));
        w = std::max(w, rows.back().first.size());
    }
    std::ostringstream os;
    os << "subset" << std::string(w - 6 + 2, ' ') << "g(subset)\n";
    for (const auto& [a, b] : rows) {
        os << a << std::string(w - a.size() + 2, ' ') << b << '\n';
    }
    return os.str();
}

std::string hasse_dot(const Poset& p) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (const auto& n : p.names()) {
        os << "  \"" << n << "\";\n";
    }
    for (const auto& [lo, hi] : p.covers()) {
        os << "  \"" << p.name(lo) << "\" -> \"" << p.name(hi) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

std::string shape_name(const Poset& p, Mask m) {
    const auto n = popcount(m);
    if (n == 1) {
        return "singleton";
    }
    if (p.is_chain(m)) {
        return std::to_string(n) + "-chain";
    }
    if (p.is_antichain(m)) {
        return std::to_string(n) + "-antichain";
    }
    if (static_cast<std::size_t>(n) <= canonical_code_limit) {
        const auto code = canonical_code(p, m);
        for (PatternKind k : all_patterns) {
            if (canonical_code(pattern(k)) == code) {
                return std::string(pattern_name(k));
            }
        }
    }
    const Poset q = p.induced(m);
    if (is_flower(q)) {
        return "flower(" + std::to_string(height(p, m)) + "x" + std::to_string(width(p, m)) + ")";
    }
    if (is_coflower(q)) {
        return "co-flower(" + std::to_string(height(p, m)) + "x" + std::to_string(width(p, m)) + ")";
    }
    return "poset(" + std::to_string(n) + ")";
}

} // namespace subrep::cli
