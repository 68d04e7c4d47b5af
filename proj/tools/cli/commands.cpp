#include "cli/commands.hpp"

#include "cli/formats.hpp"

#include <subrep/classify.hpp>
#include <subrep/construct.hpp>
#include <subrep/embed.hpp>
#include <subrep/errors.hpp>
#include <subrep/oracle.hpp>
#include <subrep/pinboard.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace subrep::cli {

namespace {

using nlohmann::json;

Poset load_poset(const std::string& path) {
    return parse_poset_text(read_file(path));
}

int cmd_classify(const std::string& path, bool dot, std::ostream& out) {
    const auto desc = parse_descriptor_text(read_file(path));
    if (dot) {
        const auto* p = std::get_if<Poset>(&desc);
        if (!p) {
            throw Error(ErrorCode::InvalidDescriptor, "--dot needs a finite poset");
        }
        out << hasse_dot(*p);
        return exit_ok;
    }
    const Verdict v = classify_descriptor(desc);
    const auto* p = std::get_if<Poset>(&desc);
    out << verdict_to_json(p, v).dump(2) << '\n';
    return exit_ok;
}

int cmd_embed(const std::string& a, const std::string& b, std::ostream& out) {
    const Poset p1 = load_poset(a);
    const Poset p2 = load_poset(b);
    const auto e = find_embedding(p1, p2);
    json j;
    j["embeds"] = e.has_value();
    if (e) {
        json w = json::object();
        for (std::size_t i = 0; i < e->size(); ++i) {
            w[p1.name(i)] = p2.name((*e)[i]);
        }
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_subrep(const std::string& path, bool as_json, std::ostream& out) {
    const Poset p = load_poset(path);
    const Verdict v = classify_finite(p);
    if (!v.sub_representable) {
        out << verdict_to_json(&p, v).dump(2) << '\n';
        return exit_ok;
    }
    const SubRepMap g = build_g(p);
    if (as_json) {
        json j = verdict_to_json(&p, v);
        j["g"] = g_to_json(g);
        out << j.dump(2) << '\n';
    } else {
        out << "# " << verdict_kind_name(v.kind) << ", " << g.table().size() << " subsets\n" << g_table_text(g);
    }
    return exit_ok;
}

int cmd_oracle(const std::string& path, std::ostream& out) {
    const Poset p = load_poset(path);
    const auto g = oracle_subrep(p);
    json j;
    j["subRepresentable"] = g.has_value();
    j["g"] = g ? g_to_json(*g) : json(nullptr);
    out << j.dump(2) << '\n';
    return exit_ok;
}

std::string relation_summary(const Poset& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [lo, hi] : p.covers()) {
        os << (first ? "" : ", ") << p.name(lo) << "<" << p.name(hi);
        first = false;
    }
    return first ? std::string("-") : os.str();
}

int cmd_survey(std::size_t n, bool as_json, std::ostream& out) {
    const auto rows = survey(n);
    std::size_t positive = 0;
    std::size_t disagreements = 0;
    for (const auto& r : rows) {
        positive += r.oracle_positive ? 1 : 0;
        disagreements += r.agrees() ? 0 : 1;
    }
    if (as_json) {
        json j;
        j["n"] = n;
        j["classes"] = rows.size();
        j["subRepresentable"] = positive;
        j["notSubRepresentable"] = rows.size() - positive;
        j["disagreements"] = disagreements;
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"code", to_hex(r.code)},
                           {"covers", relation_summary(r.poset)},
                           {"verdict", verdict_to_json(&r.poset, r.verdict)},
                           {"oracle", r.oracle_positive},
                           {"agree", r.agrees()}});
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << std::left << std::setw(2 * (1 + n * (n - 1) / 2) + 2) << "code" << std::setw(28) << "covers"
        << std::setw(22) << "classifier" << std::setw(8) << "oracle"
        << "agree\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(2 * (1 + n * (n - 1) / 2) + 2) << to_hex(r.code) << std::setw(28)
            << relation_summary(r.poset) << std::setw(22) << verdict_kind_name(r.verdict.kind) << std::setw(8)
            << (r.oracle_positive ? "yes" : "no") << (r.agrees() ? "yes" : "NO") << '\n';
    }
    out << rows.size() << " classes, " << positive << " sub-representable, " << rows.size() - positive
        << " not, " << disagreements << " disagreements\n";
    return exit_ok;
}

std::vector<PinPair> read_pairs(const std::string& arg, bool* starred) {
    return parse_pin_pairs(file_or_literal(arg), starred);
}

void print_theta(const std::string& label, const ThetaSegments& t, std::ostream& out) {
    out << label << ":\n";
    for (const auto& line : t.describe()) {
        out << "  " << line << '\n';
    }
}

std::string frequency_list(const PinSubset& y) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < y.pairs().size(); ++i) {
        os << (i ? "," : "") << y.pairs()[i].freq.to_string();
    }
    os << '}';
    return os.str();
}

int cmd_pinboard_theta(const std::string& spec, const std::string& subset, std::ostream& out) {
    const SimplePinboard host = parse_simple_pinboard(file_or_literal(spec));
    bool starred = false;
    const auto raw = read_pairs(subset, &starred);
    const PinSubset y = normalize_subset(raw, host, starred);
    out << "host: " << host.to_string() << '\n';
    out << "normalized: " << y.to_string() << '\n';
    out << "frequencies: " << frequency_list(y) << '\n';
    print_theta("theta", theta(host, y), out);
    return exit_ok;
}

int cmd_pinboard_embed(const std::string& spec, const std::string& s1, const std::string& s2, std::ostream& out) {
    const SimplePinboard host = parse_simple_pinboard(file_or_literal(spec));
    bool star1 = false;
    bool star2 = false;
    const auto raw1 = read_pairs(s1, &star1);
    const auto raw2 = read_pairs(s2, &star2);
    const PinSubset y1 = normalize_subset(raw1, host, star1);
    const PinSubset y2 = normalize_subset(raw2, host, star2);
    out << "embeds: " << (pin_embeds(y1, y2) ? "true" : "false") << '\n';
    out << "subset: " << (theta_subset(theta(host, y1), theta(host, y2)) ? "true" : "false") << '\n';
    return exit_ok;
}

Poset flower_example() {
    return poset_from_cover({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"2", "4"}});
}

Poset side_point_chain() {
    return poset_from_cover({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"4", "3"}});
}

int demo_flower(std::ostream& out) {
    const Poset p = flower_example();
    const SubRepMap g = build_g(p);
    out << "poset: " << relation_summary(p) << '\n';
    out << "verdict: " << verdict_kind_name(classify_finite(p).kind) << '\n';
    out << "representatives by isomorphism class:\n";
    std::map<Mask, std::vector<Mask>> by_image;
    for (const auto& [s, img] : g.table()) {
        by_image[img].push_back(s);
    }
    std::vector<std::pair<Mask, std::vector<Mask>>> classes(by_image.begin(), by_image.end());
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return std::make_pair(popcount(a.first), a.first) < std::make_pair(popcount(b.first), b.first);
    });
    for (const auto& [img, members] : classes) {
        out << "  " << std::left << std::setw(14) << shape_name(p, img) << std::setw(12) << p.format_set(img)
            << members.size() << " subset" << (members.size() == 1 ? "" : "s") << '\n';
    }
    out << "violations: " << verify_subrep(p, g).size() << '\n';
    return exit_ok;
}

int demo_refusal(std::ostream& out) {
    const Poset p = side_point_chain();
    out << "poset: " << relation_summary(p) << '\n';
    const Poset& wedge = pattern(PatternKind::Wedge);
    const Poset& two_chain = poset_from_cover({"a", "b"}, {{"a", "b"}});
    std::vector<Mask> wedges;
    for (Mask s = 1; s <= p.all(); ++s) {
        if (popcount(s) == 3 && canonical_code(p, s) == canonical_code(wedge)) {
            wedges.push_back(s);
        }
    }
    out << "a wedge must be represented by one of:";
    for (Mask w : wedges) {
        out << ' ' << p.format_set(w);
    }
    out << '\n';
    std::set<Mask> chains;
    for (Mask w : wedges) {
        for (Mask s = 1; s <= p.all(); ++s) {
            if ((s & ~w) == 0 && popcount(s) == 2 && canonical_code(p, s) == canonical_code(two_chain)) {
                chains.insert(s);
            }
        }
    }
    out << "so a 2-chain is represented by one of:";
    for (Mask c : chains) {
        out << ' ' << p.format_set(c);
    }
    out << '\n';
    for (Mask c : chains) {
        Mask free = p.all() & ~c;
        for_each_bit(c, [&](std::size_t i) { free &= ~(p.up(i) | p.down(i)); });
        out << "  points incomparable with " << p.format_set(c) << ": " << p.format_set(free) << '\n';
    }
    out << "hence {1,2,4} (2-chain plus a point) has no representative\n";
    out << "oracle: " << (oracle_subrep(p).has_value() ? "sub-representable" : "not sub-representable") << '\n';
    out << "classify: " << verdict_to_json(&p, classify_finite(p)).dump() << '\n';
    return exit_ok;
}

int demo_pinboard(std::ostream& out) {
    const SimplePinboard host = SimplePinboard::make(CardinalSym::aleph(2), 12, 7, CardinalSym::aleph(3));
    const auto a0 = CardinalSym::aleph(0);
    const auto one = CardinalSym::finite(1);
    const auto two = CardinalSym::finite(2);
    const std::vector<PinPair> y_raw{
        {parse_ordinal("w1+1"), one}, {parse_ordinal("w1"), one}, {parse_ordinal("w0+5"), two},
        {parse_ordinal("w0"), one},   {parse_ordinal("30"), two}, {parse_ordinal("20"), one},
        {parse_ordinal("5"), a0},     {parse_ordinal("3"), a0},
    };
    const std::vector<PinPair> y2_raw{
        {parse_ordinal("w2"), two}, {parse_ordinal("w1+10"), one}, {parse_ordinal("w1"), one},
        {parse_ordinal("w0"), one}, {parse_ordinal("60"), one},    {parse_ordinal("40"), one},
        {parse_ordinal("30"), one}, {parse_ordinal("20"), one},    {parse_ordinal("6"), CardinalSym::aleph(1)},
    };
    const PinSubset y = normalize_subset(y_raw, host);
    const PinSubset y2 = normalize_subset(y2_raw, host);
    const auto ty = theta(host, y);
    const auto ty2 = theta(host, y2);
    out << "host: " << host.to_string() << '\n';
    out << "Y: " << y.to_string() << '\n';
    out << "frequencies: " << frequency_list(y) << '\n';
    print_theta("theta(Y)", ty, out);
    out << "Y': " << y2.to_string() << '\n';
    out << "frequencies: " << frequency_list(y2) << '\n';
    print_theta("theta(Y')", ty2, out);
    out << "embeds: " << (pin_embeds(y, y2) ? "true" : "false") << '\n';
    out << "subset: " << (theta_subset(ty, ty2) ? "true" : "false") << '\n';
    out << "reverse subset: " << (theta_subset(ty2, ty) ? "true" : "false") << '\n';
    return exit_ok;
}

int dispatch_error(const Error& e, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse || e.code() == ErrorCode::UnknownElement ||
                   e.code() == ErrorCode::DuplicateElement || e.code() == ErrorCode::CycleDetected
               ? exit_parse
               : exit_semantic;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sub-representability of posets"};
    app.require_subcommand(1);

    std::string file;
    std::string file2;
    bool dot = false;
    bool as_json = false;
    std::size_t n = 0;
    std::string which;
    std::string spec;
    std::string sub1;
    std::string sub2;

    auto* classify = app.add_subcommand("classify", "Classify a poset file or descriptor (verdict JSON)");
    classify->add_option("file", file, "poset or descriptor file")->required();
    classify->add_flag("--dot", dot, "print the Hasse diagram as DOT instead");

    auto* embed = app.add_subcommand("embed", "Order embedding of FILE1 into FILE2");
    embed->add_option("file1", file, "source poset")->required();
    embed->add_option("file2", file2, "target poset")->required();

    auto* subrep = app.add_subcommand("subrep", "Print the map g, or the reason none exists");
    subrep->add_option("file", file, "poset file")->required();
    subrep->add_flag("--json", as_json, "JSON output");

    auto* oracle = app.add_subcommand("oracle", "Brute-force decision from the definition");
    oracle->add_option("file", file, "poset file")->required();

    auto* surv = app.add_subcommand("survey", "All posets on N points: classifier vs oracle");
    surv->add_option("n", n, "number of points (1..5)")->required();
    surv->add_flag("--json", as_json, "JSON output");

    auto* pin = app.add_subcommand("pinboard", "Pinboard theta construction");
    pin->require_subcommand(1);
    auto* pin_theta = pin->add_subcommand("theta", "theta image of a subset");
    pin_theta->add_option("spec", spec, "simple pinboard, e.g. 'pin (aleph2,12) (7,aleph3)'")->required();
    pin_theta->add_option("subset", sub1, "subset pairs, e.g. 'pin (w1,1) (5,aleph0)'")->required();
    auto* pin_embed = pin->add_subcommand("embed", "Compare two subsets");
    pin_embed->add_option("spec", spec, "simple pinboard")->required();
    pin_embed->add_option("subset1", sub1, "first subset")->required();
    pin_embed->add_option("subset2", sub2, "second subset")->required();

    auto* demo = app.add_subcommand("demo", "Reproduce a worked example");
    demo->add_option("which", which, "fig1 | fig3 | section2")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig3", "section2"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (*classify) {
            return cmd_classify(file, dot, out);
        }
        if (*embed) {
            return cmd_embed(file, file2, out);
        }
        if (*subrep) {
            return cmd_subrep(file, as_json, out);
        }
        if (*oracle) {
            return cmd_oracle(file, out);
        }
        if (*surv) {
            return cmd_survey(n, as_json, out);
        }
        if (*pin_theta) {
            return cmd_pinboard_theta(spec, sub1, out);
        }
        if (*pin_embed) {
            return cmd_pinboard_embed(spec, sub1, sub2, out);
        }
        if (*demo) {
            if (which == "fig1") {
                return demo_flower(out);
            }
            if (which == "fig3") {
                return demo_refusal(out);
            }
            return demo_pinboard(out);
        }
    } catch (const Error& e) {
        return dispatch_error(e, err);
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_parse;
}

} // namespace subrep::cli
