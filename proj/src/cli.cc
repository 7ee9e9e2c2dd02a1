#include <gvm/cli.hh>
#include <gvm/construct.hh>
#include <gvm/errors.hh>
#include <gvm/friendship.hh>
#include <gvm/generators.hh>
#include <gvm/search.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

using std::int64_t;
using std::string;
using std::vector;

namespace gvm::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

auto read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void emit(std::ostream & out, const string & path, const string & text)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (! (file << text))
        throw ParseError("cannot write " + path);
}

auto to_int(const string & s, const char * what) -> int64_t
{
    int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size())
        throw UsageError(string(what) + " must be an integer, got '" + s + "'");
    return v;
}

auto to_ints(const vector<string> & params, const char * what) -> vector<int>
{
    vector<int> out;
    for (auto & p : params)
        out.push_back(static_cast<int>(to_int(p, what)));
    return out;
}

auto is_integer(const string & s)
{
    return ! s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

auto generate(const string & family, const vector<string> & params) -> Graph
{
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw UsageError("gen " + family + " takes " + std::to_string(count) + " parameter(s)");
    };
    auto at_least = [&](std::size_t count) {
        if (params.size() < count)
            throw UsageError("gen " + family + " takes at least " + std::to_string(count) + " parameter(s)");
    };
    if (family == "path" || family == "cycle" || family == "complete") {
        want(1);
        auto n = static_cast<int>(to_int(params[0], "n"));
        return family == "path" ? gen_path(n) : family == "cycle" ? gen_cycle(n) : gen_complete(n);
    }
    if (family == "multipartite") {
        at_least(1);
        return gen_complete_multipartite(to_ints(params, "part size"));
    }
    if (family == "caterpillar") {
        at_least(1);
        auto pendants = to_ints(params, "pendant count");
        for (auto p : pendants)
            if (p < 0)
                throw UsageError("pendant counts must be non-negative");
        return gen_caterpillar(pendants);
    }
    if (family == "friendship") {
        want(2);
        return gen_friendship({static_cast<int>(to_int(params[0], "n")), static_cast<int>(to_int(params[1], "m"))});
    }
    if (family == "zerodiv")
        return gen_zero_divisor(to_ints(params, "prime"));
    if (family == "hjoin") {
        at_least(1);
        auto h = read_graph(read_file(params[0]));
        vector<Graph> parts;
        for (std::size_t i = 1; i < params.size(); ++i)
            parts.push_back(is_integer(params[i]) ? gen_empty(static_cast<int>(to_int(params[i], "part size")))
                                                  : read_graph(read_file(params[i])));
        return h_join(h, parts);
    }
    throw UsageError("unknown family '" + family + "'");
}

auto has_strong_support(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1)
            continue;
        int pendants = 0;
        for (auto u : g.neighbours(v))
            pendants += g.degree(u) == 1;
        if (pendants < 2)
            return false;
    }
    return g.order() > 0;
}

struct Constructed {
    string method;
    MagicCertificate certificate;
};

auto construct(const Graph & g, const GroupSpec & spec, const string & method, const SearchOptions & options)
    -> std::optional<Constructed>
{
    auto r = reduce(g);
    auto sizes = r.class_sizes();
    bool all_twins = g.order() > 0 && std::all_of(sizes.begin(), sizes.end(), [](int s) { return s >= 2; });

    if (method == "hjoin" || (method == "auto" && all_twins))
        return Constructed{"hjoin", label_twin_classes(g, spec)};
    if (method == "strong-support" || (method == "auto" && has_strong_support(g)))
        return Constructed{"strong-support", label_strong_support(g, spec)};
    if (method == "auto" && is_caterpillar(g) && g.order() >= 4) {
        auto v = classify_caterpillar(g, spec);
        if (v.magic)
            return Constructed{"caterpillar", *v.certificate};
    }
    auto found = brute_force_a_prime(r, spec, options);
    if (auto * q = std::get_if<QuotientCertificate>(&found))
        return Constructed{"lift", lift_labeling(g, r, *q)};
    return std::nullopt;
}

auto parse_orders(const string & text) -> vector<int64_t>
{
    vector<int64_t> out;
    std::stringstream in(text);
    string item;
    while (std::getline(in, item, ',')) {
        auto dash = item.find('-');
        if (dash == string::npos) {
            out.push_back(to_int(item, "order"));
            continue;
        }
        auto lo = to_int(item.substr(0, dash), "order"), hi = to_int(item.substr(dash + 1), "order");
        for (auto k = lo; k <= hi; ++k)
            out.push_back(k);
    }
    if (out.empty())
        throw UsageError("--orders lists no group orders");
    for (auto k : out)
        if (k < 2)
            throw UsageError("group orders must be at least 2");
    return out;
}

struct Cell {
    bool predicted = false, found = false, certified = true;
};

auto xval(int nmax, int mmax, const vector<int64_t> & orders, int jobs, int64_t bound, std::ostream & out) -> int
{
    if (nmax < 3 || mmax < 1)
        throw UsageError("need --nmax >= 3 and --mmax >= 1");
    vector<GroupSpec> specs;
    for (auto k : orders)
        for (auto & s : groups_of_order(k))
            specs.push_back(s);

    struct Task {
        FriendshipParams p;
        int spec;  // -1: bounded integer search
    };
    vector<Task> tasks;
    for (int n = 3; n <= nmax; ++n)
        for (int m = 1; m <= mmax; ++m)
            for (int s = -1; s < static_cast<int>(specs.size()); ++s)
                tasks.push_back({{n, m}, s});

    vector<Cell> cells(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            auto & t = tasks[i];
            auto g = gen_friendship(t.p);
            if (t.spec < 0) {
                cells[i].found = std::holds_alternative<MagicCertificate>(brute_force_int(g, bound));
                continue;
            }
            auto & spec = specs[t.spec];
            auto v = classify(t.p, spec);
            cells[i].predicted = v.magic;
            cells[i].found = std::holds_alternative<MagicCertificate>(brute_force_magic(g, spec));
            if (v.certificate) {
                auto check = verify_magic(g, v.certificate->labeling);
                cells[i].certified = std::holds_alternative<MagicCertificate>(check)
                    && std::get<MagicCertificate>(check).mu == v.certificate->mu;
            }
        }
    };
    vector<std::thread> threads;
    for (int t = 1; t < std::max(jobs, 1); ++t)
        threads.emplace_back(work);
    work();
    for (auto & t : threads)
        t.join();

    int agree = 0, total = 0, all_agree = 0, all_total = 0;
    std::size_t i = 0;
    for (int n = 3; n <= nmax; ++n)
        for (int m = 1; m <= mmax; ++m) {
            auto integer = cells[i++];
            bool every = integer.found;
            int row_ok = 0;
            vector<string> failures;
            for (auto & spec : specs) {
                auto & c = cells[i++];
                every = every && c.found;
                bool ok = c.predicted == c.found && c.certified;
                row_ok += ok;
                if (! ok)
                    failures.push_back(format_spec(spec) + " classify=" + (c.predicted ? "magic" : "not-magic")
                        + " search=" + (c.found ? "magic" : "exhausted") + (c.certified ? "" : " bad-certificate"));
            }
            auto all = classify_all({n, m});
            bool all_ok = all.magic == every;
            agree += row_ok;
            total += static_cast<int>(specs.size());
            all_agree += all_ok;
            ++all_total;
            out << "f(" << n << "," << m << ") " << row_ok << "/" << specs.size() << " "
                << (all_ok ? "pass" : "FAIL") << " ALL " << (all.magic ? "magic" : "not-magic") << "\n";
            for (auto & f : failures)
                out << "  FAIL " << f << "\n";
        }
    bool pass = agree == total && all_agree == all_total;
    out << "cells " << agree << "/" << total << " all-groups " << all_agree << "/" << all_total << " "
        << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

auto sections(const Graph & g, const MagicCertificate & c) -> string
{
    return "graph\n" + write_graph(g) + "certificate\n" + write_certificate(c);
}

}

auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Group vertex magic labelings: generators, search, constructions and classification", "gvm"};
    app.require_subcommand(1);

    string family, output, graph_path, labeling_path, group, method = "auto", orders = "2-9";
    string graph_out, certificate_out;
    vector<string> params;
    SearchOptions options;
    int64_t bound = 3;
    int n = 0, m = 0, class_index = 0, nmax = 10, mmax = 4;
    bool all = false, show = false;

    auto gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("family", family, "path|cycle|complete|multipartite|caterpillar|friendship|zerodiv|hjoin")
        ->required();
    gen->add_option("params", params, "Family parameters; hjoin takes an H file then part sizes or files");
    gen->add_option("-o,--output", output, "Write the graph here instead of stdout");

    auto red = app.add_subcommand("reduce", "Quotient by neighbourhood classes");
    red->add_option("graph", graph_path)->required();

    auto ver = app.add_subcommand("verify", "Check a labeling");
    ver->add_option("graph", graph_path)->required();
    ver->add_option("labeling", labeling_path)->required();
    ver->add_option("--group", group)->required();

    auto search = app.add_subcommand("search", "Exhaustive search over a finite group");
    search->add_option("graph", graph_path)->required();
    search->add_option("--group", group)->required();
    search->add_option("--cap", options.cap, "Maximum label assignments");
    search->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
    search->add_option("-o,--output", output);

    auto search_int = app.add_subcommand("search-int", "Search over Z with bounded labels");
    search_int->add_option("graph", graph_path)->required();
    search_int->add_option("--bound", bound)->required();
    search_int->add_option("--cap", options.cap);
    search_int->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
    search_int->add_option("-o,--output", output);

    auto cons = app.add_subcommand("construct", "Build a certificate from the graph's structure");
    cons->add_option("graph", graph_path)->required();
    cons->add_option("--group", group)->required();
    cons->add_option("--method", method)->check(CLI::IsMember({"auto", "hjoin", "lift", "strong-support"}));
    cons->add_option("--cap", options.cap);
    cons->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
    cons->add_option("-o,--output", output);

    auto friendship = app.add_subcommand("classify-friendship", "Decide f(n,m) over a group or over all groups");
    friendship->add_option("n", n)->required();
    friendship->add_option("m", m)->required();
    auto group_opt = friendship->add_option("--group", group);
    auto all_opt = friendship->add_flag("--all", all);
    group_opt->excludes(all_opt);
    friendship->add_flag("--certificate", show, "Also print the certificate");

    auto cat = app.add_subcommand("classify-caterpillar", "Decide a caterpillar over every group of order > 2");
    cat->add_option("graph", graph_path)->required();
    cat->add_option("--group", group, "Also build a certificate over this group");

    auto embed = app.add_subcommand("embed", "Embed as an induced subgraph of a magic graph");
    embed->add_option("graph", graph_path)->required();
    embed->add_option("--group", group)->required();
    embed->add_option("--graph-out", graph_out);
    embed->add_option("--certificate-out", certificate_out);

    auto extend = app.add_subcommand("extend", "Add a vertex to a neighbourhood class");
    extend->add_option("graph", graph_path)->required();
    extend->add_option("labeling", labeling_path)->required();
    extend->add_option("--group", group)->required();
    extend->add_option("--class", class_index)->required();
    extend->add_option("--graph-out", graph_out);
    extend->add_option("--certificate-out", certificate_out);

    auto xv = app.add_subcommand("xval-friendship", "Cross-check the f(n,m) classification against search");
    xv->add_option("--nmax", nmax);
    xv->add_option("--mmax", mmax);
    xv->add_option("--orders", orders, "Group orders, e.g. 2-9 or 3,5,7");
    xv->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
    xv->add_option("--bound", bound, "Label bound for the Z search in the all-groups column")->default_val(4);

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        if (! reversed.empty())
            reversed.pop_back();
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    auto load_graph = [&] { return read_graph(read_file(graph_path)); };
    auto load_certificate = [&](const Graph & g, const GroupSpec & spec) {
        auto parsed = read_labeling(spec, read_file(labeling_path));
        return std::pair{parsed, verify_magic(g, parsed.labeling)};
    };

    try {
        if (*gen) {
            emit(out, output, write_graph(generate(family, params)));
            return 0;
        }
        if (*red) {
            out << write_reduced(reduce(load_graph()));
            return 0;
        }
        if (*ver) {
            auto g = load_graph();
            auto [parsed, verdict] = load_certificate(g, parse_spec(group));
            if (auto * bad = std::get_if<Refutation>(&verdict)) {
                out << "refutation: " << bad->describe() << "\n";
                return 1;
            }
            auto & c = std::get<MagicCertificate>(verdict);
            if (parsed.mu && *parsed.mu != c.mu) {
                out << "refutation: stated mu " << format_element(*parsed.mu) << " != weight "
                    << format_element(c.mu) << "\n";
                return 1;
            }
            out << write_certificate(c);
            return 0;
        }
        if (*search || *search_int) {
            auto g = load_graph();
            try {
                if (*search) {
                    auto result = brute_force_magic(g, parse_spec(group), options);
                    if (auto * e = std::get_if<Exhausted>(&result)) {
                        out << "exhausted (" << e->nodes << " partial labelings tried)\n";
                        return 1;
                    }
                    emit(out, output, write_certificate(std::get<MagicCertificate>(result)));
                    return 0;
                }
                auto result = brute_force_int(g, bound, options);
                if (auto * e = std::get_if<BoundedExhausted>(&result)) {
                    out << "bounded-exhausted (no labeling with labels in [-" << e->bound << "," << e->bound << "], "
                        << e->nodes << " partial labelings tried)\n";
                    return 1;
                }
                emit(out, output, write_certificate(std::get<MagicCertificate>(result)));
                return 0;
            }
            catch (const ResourceError & e) {
                err << "gvm: " << e.what() << "\n";
                return 2;
            }
        }
        if (*cons) {
            auto g = load_graph();
            auto built = construct(g, parse_spec(group), method, options);
            if (! built) {
                out << "no certificate: the reduced graph has no A' labeling\n";
                return 1;
            }
            err << "method: " << built->method << "\n";
            emit(out, output, write_certificate(built->certificate));
            return 0;
        }
        if (*friendship) {
            if (group.empty() && ! all)
                throw UsageError("classify-friendship needs --group or --all");
            auto v = all ? classify_all({n, m}) : classify({n, m}, parse_spec(group));
            out << format_verdict(v) << "\n";
            if (show && v.certificate)
                out << write_certificate(*v.certificate);
            return v.magic ? 0 : 1;
        }
        if (*cat) {
            auto g = load_graph();
            std::optional<GroupSpec> spec;
            if (! group.empty())
                spec = parse_spec(group);
            auto v = classify_caterpillar(g, spec);
            if (! v.magic) {
                out << "not-magic (vertex " << *v.witness << " has degree 2)\n";
                return 1;
            }
            out << "magic (no vertex of degree 2)\n";
            if (v.certificate)
                out << write_certificate(*v.certificate);
            return 0;
        }
        if (*embed) {
            auto e = embed_as_induced(load_graph(), parse_spec(group));
            out << sections(e.graph, e.certificate) << "injection\n";
            for (auto [from, to] : e.injection)
                out << from << " " << to << "\n";
            if (! graph_out.empty())
                emit(out, graph_out, write_graph(e.graph));
            if (! certificate_out.empty())
                emit(out, certificate_out, write_certificate(e.certificate));
            return 0;
        }
        if (*extend) {
            auto g = load_graph();
            auto spec = parse_spec(group);
            auto [parsed, verdict] = load_certificate(g, spec);
            auto * c = std::get_if<MagicCertificate>(&verdict);
            if (! c)
                throw PreconditionError("labeling does not verify: " + std::get<Refutation>(verdict).describe());
            auto e = extend_class(g, *c, class_index);
            out << sections(e.graph, e.certificate) << "new " << e.new_vertex << "\n";
            if (! graph_out.empty())
                emit(out, graph_out, write_graph(e.graph));
            if (! certificate_out.empty())
                emit(out, certificate_out, write_certificate(e.certificate));
            return 0;
        }
        if (*xv)
            return xval(nmax, mmax, parse_orders(orders), options.jobs, bound, out);
    }
    catch (const UsageError & e) {
        err << "gvm: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const ResourceError & e) {
        err << "gvm: " << e.what() << "\n";
        return exit_resource;
    }
    catch (const Error & e) {
        err << "gvm: " << e.what() << "\n";
        return exit_data;
    }
    return exit_usage;
}

}
