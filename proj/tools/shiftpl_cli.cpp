// shiftpl: expansion, identity verification, q-tables, the insertion
// bijection and oracle comparisons from the command line.
//
// Exit codes: 0 success or pass, 1 identity mismatch, 2 usage error.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <shiftpl/series_json.hpp>
#include <shiftpl/verify.hpp>

using namespace shiftpl;

namespace {

constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct options {
    std::string series_name;
    std::string form;
    std::optional<long> m;
    std::string set;
    int L = 5;
    int K = 14;
    long Q = 20;
    std::string format = "text";
    std::string id;
    bool all = false;
    unsigned threads = 0;
    std::string composition;
};

std::optional<set_spec> parse_set(const options& o)
{
    if (o.set.empty())
        return std::nullopt;
    return set_spec::parse(o.set);
}

const std::map<std::string, language_kind>& language_names()
{
    static const std::map<std::string, language_kind> names{
        {"sigma", language_kind::sigma},         {"compositions", language_kind::compositions},
        {"pi-m", language_kind::pi_m},           {"pi-inf", language_kind::pi_inf},
        {"pi-upper-m", language_kind::pi_upper_m}, {"pi-upper-inf", language_kind::pi_upper_inf},
        {"p-m", language_kind::p_m},             {"p-s", language_kind::p_s},
        {"c-m", language_kind::c_m},             {"c-shat", language_kind::c_shat},
        {"carlitz", language_kind::carlitz},     {"repeated", language_kind::repeated},
    };
    return names;
}

const std::map<std::string, closed_form_id>& form_names()
{
    static const std::map<std::string, closed_form_id> names{
        {"pm", closed_form_id::pm},       {"cm", closed_form_id::cm},     {"rm", closed_form_id::rm},
        {"hydra-a", closed_form_id::hydra_a}, {"ps", closed_form_id::ps}, {"cshat", closed_form_id::cshat},
        {"local-minima", closed_form_id::local_minima},
    };
    return names;
}

std::string known_names(const auto& table, std::initializer_list<const char*> extra = {})
{
    std::string s;
    for (const auto& [name, kind] : table)
        s += (s.empty() ? "" : ", ") + name;
    for (const char* e : extra)
        s += std::string(", ") + e;
    return s;
}

template <coefficient_ring C>
void write_series(const basic_series<C>& s, const std::string& format)
{
    if (format == "json") {
        std::cout << series_to_json(s).dump(2) << "\n";
        return;
    }
    if (format == "tsv")
        std::cout << "word\tcoeff\n";
    else
        std::cout << "# window " << to_string(s.window()) << "\n";
    for (const auto& [x, c] : s.sorted_terms())
        std::cout << "(" << to_string(x) << ")\t" << verify::detail::coefficient_text(c) << "\n";
}

int run_expand(const options& o)
{
    truncation_window w{o.L, o.K};
    verify::require_within_limits(w);
    const std::string& name = o.series_name;
    if (name == "hydra-R") {
        write_series(hydra_R(o.m, w), o.format);
    } else if (name == "hydra-A") {
        write_series(enriched_trees(partitions_decreasing(o.m, truncation_window{o.L - 1, o.K}), w), o.format);
    } else if (name == "quotient-partitions" || name == "quotient-compositions") {
        if (!o.m)
            throw usage_error(name + " needs --m");
        write_series(name == "quotient-partitions" ? quotient_partition_form(*o.m, w)
                                                   : quotient_composition_form(*o.m, w),
                     o.format);
    } else if (name == "local-minima") {
        write_series(compositions_by_local_minima(w), o.format);
    } else if (auto it = language_names().find(name); it != language_names().end()) {
        write_series(build_language(it->second, {o.m, parse_set(o)}, w), o.format);
    } else {
        throw usage_error("unknown series '" + name + "'; known: " +
                          known_names(language_names(), {"hydra-R", "hydra-A", "quotient-partitions",
                                                         "quotient-compositions", "local-minima"}));
    }
    return 0;
}

zq_series closed_form_of(const options& o, int zmax, long qmax)
{
    auto it = form_names().find(o.form);
    if (it == form_names().end())
        throw usage_error("unknown form '" + o.form + "'; known: " + known_names(form_names()));
    long default_m = it->second == closed_form_id::cm || it->second == closed_form_id::rm ||
                             it->second == closed_form_id::hydra_a
                         ? 2
                         : 1;
    return closed_form(it->second, {o.m.value_or(default_m), parse_set(o)}, zmax, qmax);
}

void write_zq(const zq_series& f, const std::string& format)
{
    if (format == "json")
        std::cout << f.to_json().dump(2) << "\n";
    else
        f.write_tsv(std::cout);
}

int run_qtable(const options& o)
{
    write_zq(closed_form_of(o, o.L, o.Q), o.format);
    return 0;
}

int run_oracle_compare(const options& o)
{
    auto closed = closed_form_of(o, o.L, o.Q);
    auto s = parse_set(o);
    verify::bounds b{o.L, static_cast<int>(o.Q)};
    auto form = form_names().at(o.form);
    long m = o.m.value_or(form == closed_form_id::cm ? 2 : 1);
    std::function<std::vector<word>(int)> words;
    std::function<long(const word&)> marker;
    switch (form) {
    case closed_form_id::pm:
        words = [m](int n) { return oracle::enum_partitions_with_rises(n, [m](long d) { return d >= m; }); };
        break;
    case closed_form_id::cm:
        words = [m](int n) {
            return oracle::enum_compositions(n, oracle::differences([m](long d) { return d <= m - 1; }));
        };
        break;
    case closed_form_id::ps:
        words = [s](int n) { return oracle::enum_partitions_with_rises(n, [&](long d) { return s->contains(d); }); };
        break;
    case closed_form_id::cshat:
        words = [s](int n) {
            return oracle::enum_compositions(n, oracle::differences([&](long d) { return !(d >= 0 && s->contains(d)); }));
        };
        break;
    case closed_form_id::local_minima:
        words = [](int n) { return oracle::enum_compositions(n); };
        marker = [](const word& k) { return static_cast<long>(oracle::count_local_minima(k)); };
        break;
    default:
        throw usage_error("oracle-compare supports pm, cm, ps, cshat and local-minima");
    }
    verify::identity e{"oracle-" + o.form, "closed form against oracle counts", verify::identity_kind::q_series, b};
    e.builds_series = false;
    e.q_lhs = [&](const verify::bounds&) { return closed; };
    e.q_rhs = [&](const verify::bounds& bb) { return verify::detail::oracle_series(bb, words, marker); };
    auto r = verify::run(e);
    if (o.format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.line() << "\n";
    return r.pass ? 0 : exit_mismatch;
}

int run_verify(const options& o, bool l_given, bool k_given)
{
    if (o.all == !o.id.empty())
        throw usage_error("verify needs exactly one of --id or --all");
    std::vector<verify::report> reports;
    if (o.all) {
        if (l_given || k_given)
            throw usage_error("verify --all uses each identity's default window");
        std::vector<const verify::identity*> ids;
        for (const auto& e : verify::catalog())
            ids.push_back(&e);
        reports = verify::run_many(ids, o.threads);
    } else {
        const auto* e = verify::find(o.id);
        if (!e)
            throw usage_error("unknown identity '" + o.id + "'; see list-identities");
        verify::bounds b = e->defaults;
        if (l_given)
            b.L = o.L;
        if (k_given)
            b.K = o.K;
        reports.push_back(verify::run(*e, b));
    }
    bool pass = true;
    if (o.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            j.push_back(r.to_json());
        std::cout << (reports.size() == 1 ? j[0] : j).dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (o.format != "json")
            std::cout << r.line() << "\n";
        pass = pass && r.pass;
    }
    return pass ? 0 : exit_mismatch;
}

int run_bijection(const options& o)
{
    word k;
    std::stringstream ss(o.composition);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(part, &used);
            if (used != part.size())
                throw std::invalid_argument(part);
            k.push_back(static_cast<letter>(v));
        } catch (const std::logic_error&) {
            throw usage_error("malformed composition '" + o.composition + "'");
        }
    }
    if (!is_cyclic_composition(k))
        throw usage_error("(" + to_string(k) + ") is not a cyclic composition");
    auto t = insertion_tree(k);
    bool round_trip = preorder_word(t) == k;
    if (o.format == "json") {
        nlohmann::ordered_json j{{"composition", to_string(k)},
                                 {"tree", to_text(t)},
                                 {"preorder", to_string(preorder_word(t))},
                                 {"round_trip", round_trip},
                                 {"leaves", count_leaves(t)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "tree " << to_text(t) << "\n"
                  << "preorder (" << to_string(preorder_word(t)) << ")\n"
                  << "round trip " << (round_trip ? "ok" : "FAILED") << "\n";
    }
    return round_trip ? 0 : exit_mismatch;
}

int run_list()
{
    for (const auto& e : verify::catalog())
        std::cout << e.id << "\tL=" << e.defaults.L << ",K=" << e.defaults.K << "\t" << e.statement << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"shiftpl: noncommutative series with shift-plethysm"};
    app.require_subcommand(1);
    options o;

    auto add_window = [&](CLI::App* c) {
        c->add_option("--L", o.L, "max word length (z-degree for q-series)")->capture_default_str();
        c->add_option("--K", o.K, "max letter (q-degree for q-series)")->capture_default_str();
    };
    auto add_params = [&](CLI::App* c) {
        c->add_option("--m", o.m, "parameter m");
        c->add_option("--set", o.set, "set S, e.g. odd, 2.., 1..3, {2,5}, 1 mod 3");
    };

    auto* expand = app.add_subcommand("expand", "expand a named series on a window");
    expand->add_option("--series", o.series_name, "series name")->required();
    add_params(expand);
    add_window(expand);
    expand->add_option("--format", o.format, "text, tsv or json")
        ->check(CLI::IsMember({"text", "tsv", "json"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "check catalog identities");
    verify_cmd->add_option("--id", o.id, "identity id");
    verify_cmd->add_flag("--all", o.all, "run the whole catalog");
    auto* l_opt = verify_cmd->add_option("--L", o.L, "window length (default: the identity's)");
    auto* k_opt = verify_cmd->add_option("--K", o.K, "window letter bound (default: the identity's)");
    verify_cmd->add_option("--threads", o.threads, "worker threads for --all (0: one per core)");
    verify_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* qtable = app.add_subcommand("qtable", "closed-form q-series table");
    qtable->add_option("--form", o.form, "pm, cm, rm, hydra-a, ps, cshat, local-minima")->required();
    add_params(qtable);
    qtable->add_option("--L", o.L, "max z-degree")->capture_default_str();
    qtable->add_option("--Q", o.Q, "max q-degree")->capture_default_str();
    qtable->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));

    auto* bijection = app.add_subcommand("bijection", "insertion tree of a cyclic composition");
    bijection->add_option("--composition", o.composition, "comma-separated parts")->required();
    bijection->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* compare = app.add_subcommand("oracle-compare", "closed form against brute-force counts");
    compare->add_option("--form", o.form, "pm, cm, ps, cshat, local-minima")->required();
    add_params(compare);
    compare->add_option("--L", o.L, "max z-degree")->capture_default_str();
    compare->add_option("--Q", o.Q, "max weight")->capture_default_str();
    compare->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* list = app.add_subcommand("list-identities", "print the identity catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (expand->parsed())
            return run_expand(o);
        if (verify_cmd->parsed())
            return run_verify(o, l_opt->count() > 0, k_opt->count() > 0);
        if (qtable->parsed())
            return run_qtable(o);
        if (bijection->parsed())
            return run_bijection(o);
        if (compare->parsed())
            return run_oracle_compare(o);
        if (list->parsed())
            return run_list();
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const window_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
