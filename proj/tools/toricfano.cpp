// Batch front-end: validation, invariants, classification, degrees and ring isomorphism search.
#include "toricfano/fixtures.hpp"
#include "toricfano/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace toricfano;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<std::string> inputs;
    std::vector<int> ids;
    int bound = 0;  // 0: command default
    std::vector<int> primes{2, 3};
    std::string relation = "all";
    std::string output;
    std::string golden;
    std::string map;
    bool relaxed_c1 = false;
    int jobs = 1;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + tok + "'");
        }
    }
    return out;
}

std::vector<std::string> default_inputs() {
    std::vector<std::string> out;
    for (int d = 2; d <= 4; ++d) out.push_back(data_dir() + "/fixtures_d" + std::to_string(d) + ".txt");
    return out;
}

std::vector<SmoothFanoPolytope> load_inputs(const RunConfig& cfg) {
    std::vector<SmoothFanoPolytope> all;
    for (const auto& path : cfg.inputs.empty() ? default_inputs() : cfg.inputs) {
        std::string text;
        try {
            text = read_text_file(path);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        try {
            for (auto& p : parse_polytopes(text)) all.push_back(std::move(p));
        } catch (const ParseError& e) {
            throw UsageError("parse error in " + path + ": " + e.what());
        }
    }
    return all;
}

std::vector<SmoothFanoPolytope> select(const std::vector<SmoothFanoPolytope>& all, const std::vector<int>& ids) {
    if (ids.empty()) return all;
    std::vector<SmoothFanoPolytope> out;
    for (int id : ids) {
        auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.id() == id; });
        if (it == all.end()) {
            std::string avail;
            for (const auto& p : all)
                if (p.id()) avail += (avail.empty() ? "" : ",") + std::to_string(*p.id());
            throw UsageError("unknown id " + std::to_string(id) + "; available ids: " + avail);
        }
        out.push_back(*it);
    }
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string ids_text(const Json& arr) {
    std::vector<std::string> parts;
    for (const auto& x : arr) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return "{" + join(parts, ",") + "}";
}

struct Outcome {
    Json json;
    std::string text;
    bool ok = true;  // false: validation or consistency failure
};

// ---- validate ----

Outcome cmd_validate(const RunConfig& cfg) {
    Outcome out;
    Json files = Json::array();
    std::ostringstream text;
    long total = 0, invalid = 0;
    for (const auto& path : cfg.inputs.empty() ? default_inputs() : cfg.inputs) {
        std::string raw;
        try {
            raw = read_text_file(path);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        std::vector<PolytopeRecord> records;
        try {
            records = parse_records(raw);
        } catch (const ParseError& e) {
            throw UsageError("parse error in " + path + ": " + e.what());
        }
        Json recs = Json::array();
        for (const auto& r : records) {
            if (!cfg.ids.empty() && std::find(cfg.ids.begin(), cfg.ids.end(), r.id) == cfg.ids.end()) continue;
            ++total;
            ValidationReport rep;
            if (static_cast<int>(r.vertices.empty() ? 0 : r.vertices[0].size()) != r.dim) {
                rep.checks.push_back({"dimension", false, "coordinates do not match the declared dimension"});
            } else {
                rep = validate_smooth_fano(r.vertices);
            }
            Json j;
            j["id"] = r.id;
            j["line"] = r.line;
            j["valid"] = rep.ok();
            Json failed = Json::array();
            for (const auto& c : rep.checks)
                if (!c.passed) failed.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
            j["failures"] = failed;
            if (!rep.ok()) {
                ++invalid;
                text << path << ":" << r.line << ": record id " << r.id << " invalid: " << rep.summary() << '\n';
                std::cerr << path << ":" << r.line << ": record id " << r.id << " invalid: " << rep.summary()
                          << '\n';
            }
            recs.push_back(std::move(j));
        }
        Json f;
        f["path"] = path;
        f["records"] = recs;
        files.push_back(std::move(f));
    }
    out.json["files"] = files;
    out.json["total"] = total;
    out.json["invalid"] = invalid;
    text << total << " records, " << invalid << " invalid\n";
    out.text = text.str();
    out.ok = invalid == 0;
    return out;
}

// ---- invariants ----

std::vector<std::uint32_t> primes_of(const RunConfig& cfg) {
    std::vector<std::uint32_t> out;
    for (int p : cfg.primes) out.push_back(static_cast<std::uint32_t>(p));
    return out;
}

std::string kve_text(const KveReport& r, const std::vector<std::string>& names) {
    std::vector<std::string> sols;
    for (const auto& a : r.solutions) sols.push_back(format_linear(a, names));
    std::string s;
    if (r.ring.kind == KveRing::Kind::Integer) {
        s = sols.empty() ? "none" : join(sols, ", ");
        if (r.infinite())
            s += " (infinite?)";
        s += "  [B=" + std::to_string(r.bound) + ", " + to_string(r.completeness) + "]";
    } else {
        if (r.solutions.empty())
            s = "none";
        else if (r.all_nonzero(static_cast<int>(names.size())))
            s = "all";
        else {
            std::vector<std::string> span;
            for (const auto& a : r.span_basis) span.push_back(format_linear(a, names));
            s = std::to_string(r.solutions.size()) + " classes, span (" + join(span, ", ") + ")" +
                (r.is_subspace ? " subspace" : "");
        }
    }
    return s;
}

Outcome cmd_invariants(const RunConfig& cfg) {
    auto ps = select(load_inputs(cfg), cfg.ids);
    SearchOptions opt;
    opt.bound = cfg.bound > 0 ? cfg.bound : 5;
    auto primes = primes_of(cfg);
    std::vector<Json> results(ps.size());
    std::vector<std::string> texts(ps.size());
    std::vector<char> agree(ps.size(), 1);
    parallel_for(ps.size(), cfg.jobs, [&](std::size_t i) {
        const auto& P = ps[i];
        auto pres = build_presentation(P);
        const auto& names = pres.names();
        Json j;
        j["polytope"] = polytope_json(P);
        j["presentation"] = presentation_json(pres);
        std::ostringstream t;
        t << "ID " << display_id(P) << "  dim " << P.dim() << "  vertices " << P.num_vertices() << '\n';
        t << "  generators: " << join(names, " ") << '\n';
        std::vector<std::string> ideal, gb;
        for (const auto& g : j["presentation"]["ideal"]) ideal.push_back(g.get<std::string>());
        for (const auto& g : j["presentation"]["groebner_basis"]) gb.push_back(g.get<std::string>());
        t << "  ideal: " << join(ideal, ", ") << '\n';
        t << "  groebner basis: " << join(gb, ", ") << '\n';

        Json kve = Json::array();
        KveReport sve;
        const char* label[] = {"", "", "s.v.e.", "c.v.e.", "4-v.e."};
        for (int k = 2; k <= std::min(P.dim(), 4); ++k) {
            if (k <= 3) {
                auto r = sve_integer_bounded(pres, k, opt);
                kve.push_back(kve_json(r, names));
                t << "  " << label[k] << " over Z: " << kve_text(r, names) << '\n';
                if (k == 2) sve = r;
            }
            for (auto p : primes) {
                auto r = kve_mod_p(pres, k, p);
                kve.push_back(kve_json(r, names));
                t << "  " << label[k] << " over Z/" << p << ": " << kve_text(r, names) << '\n';
            }
        }
        j["kve"] = kve;
        auto mbn = maximal_basis_number(pres, sve);
        j["mbn"] = mbn_json(mbn);
        t << "  mbn: " << (mbn.exact() ? std::to_string(mbn.lower)
                                       : std::to_string(mbn.lower) + ".." + std::to_string(mbn.upper))
          << '\n';
        auto deg = degree_anticanonical(P);
        auto deg_ring = degree_via_ring(pres);
        j["degree"] = {{"anticanonical", deg.get_str()}, {"via_ring", deg_ring.get_str()}};
        if (deg.fits_slong_p()) j["degree"]["anticanonical"] = deg.get_si();
        if (deg_ring.fits_slong_p()) j["degree"]["via_ring"] = deg_ring.get_si();
        agree[i] = deg == deg_ring;
        t << "  degree: " << deg.get_str() << (deg == deg_ring ? "" : "  (ring computation gives " + deg_ring.get_str() + ")")
          << '\n';
        results[i] = std::move(j);
        texts[i] = t.str();
    });
    Outcome out;
    out.json["bound"] = opt.bound;
    out.json["primes"] = cfg.primes;
    out.json["results"] = Json::array();
    for (auto& r : results) out.json["results"].push_back(std::move(r));
    out.text = join(texts, "\n");
    out.ok = std::all_of(agree.begin(), agree.end(), [](char c) { return c != 0; });
    return out;
}

// ---- classify ----

std::vector<std::string> fingerprint_keys(const std::vector<SmoothFanoPolytope>& ps, const RunConfig& cfg) {
    FingerprintOptions fo;
    fo.search.bound = cfg.bound > 0 ? cfg.bound : 5;
    std::vector<std::string> keys(ps.size());
    parallel_for(ps.size(), cfg.jobs, [&](std::size_t i) { keys[i] = fingerprint(ps[i], fo).key(); });
    return keys;
}

Outcome cmd_classify(const RunConfig& cfg) {
    auto ps = select(load_inputs(cfg), cfg.ids);
    std::vector<Relation> rels;
    if (cfg.relation == "all")
        rels = {Relation::SignEquiv, Relation::UnimodularEquiv, Relation::FingerprintEqual};
    else
        rels = {parse_relation(cfg.relation)};

    Outcome out;
    out.json["count"] = ps.size();
    Json parts = Json::object();
    std::map<Relation, Partition> done;
    std::ostringstream t;
    t << ps.size() << " polytopes\n";
    for (auto rel : rels) {
        ClassifyOptions opt;
        if (rel == Relation::FingerprintEqual) opt.fingerprint_keys = fingerprint_keys(ps, cfg);
        auto part = classify(ps, rel, opt);
        for (const auto& m : part.merges)
            if (m.witness && !verify_witness(ps[m.a], ps[m.b], *m.witness))
                throw InternalConsistencyError("witness failed re-verification");
        auto pj = partition_json(part, ps);
        std::vector<std::string> groups;
        for (const auto& c : pj["merged_classes"]) groups.push_back(ids_text(c));
        t << to_string(rel) << ": " << part.classes.size() << " classes";
        if (!groups.empty()) t << "; merged " << join(groups, " ");
        t << '\n';
        parts[to_string(rel)] = std::move(pj);
        done.emplace(rel, std::move(part));
    }
    out.json["partitions"] = parts;
    if (done.count(Relation::FingerprintEqual) && done.count(Relation::SignEquiv)) {
        Json anomalies_json = Json::array();
        std::vector<std::string> groups;
        for (const auto& c : anomalies(done.at(Relation::FingerprintEqual), done.at(Relation::SignEquiv))) {
            Json members = Json::array();
            for (auto i : c) members.push_back(id_json(ps[i]));
            groups.push_back(ids_text(members));
            anomalies_json.push_back(std::move(members));
        }
        out.json["anomalies"] = anomalies_json;
        t << "fingerprint-equal but not sign-equivalent: " << (groups.empty() ? "none" : join(groups, " ")) << '\n';
    }
    out.text = t.str();
    return out;
}

// ---- degrees ----

Outcome cmd_degrees(const RunConfig& cfg) {
    auto ps = select(load_inputs(cfg), cfg.ids);
    std::vector<Integer> da(ps.size()), dr(ps.size());
    parallel_for(ps.size(), cfg.jobs, [&](std::size_t i) {
        da[i] = degree_anticanonical(ps[i]);
        dr[i] = degree_via_ring(build_presentation(ps[i]));
    });
    Outcome out;
    Json rows = Json::array();
    TextTable table({"id", "dim", "V", "degree", "ring"});
    for (std::size_t i = 0; i < ps.size(); ++i) {
        Json j;
        j["id"] = id_json(ps[i]);
        j["dim"] = ps[i].dim();
        j["num_vertices"] = ps[i].num_vertices();
        j["degree"] = da[i].fits_slong_p() ? Json(da[i].get_si()) : Json(da[i].get_str());
        j["degree_via_ring"] = dr[i].fits_slong_p() ? Json(dr[i].get_si()) : Json(dr[i].get_str());
        j["agree"] = da[i] == dr[i];
        out.ok = out.ok && da[i] == dr[i];
        table.add_row({display_id(ps[i]), std::to_string(ps[i].dim()), std::to_string(ps[i].num_vertices()),
                       da[i].get_str(), da[i] == dr[i] ? "ok" : "MISMATCH " + dr[i].get_str()});
        rows.push_back(std::move(j));
    }
    out.json["degrees"] = rows;
    out.text = table.render();
    return out;
}

// ---- iso ----

IntMatrix parse_matrix(const std::string& s) {
    std::vector<std::vector<long>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<long> r;
        for (int x : parse_int_list(row)) r.push_back(x);
        if (!rows.empty() && r.size() != rows[0].size()) throw UsageError("ragged --map matrix");
        rows.push_back(std::move(r));
    }
    if (rows.empty() || rows.size() != rows[0].size()) throw UsageError("--map must be a square matrix");
    IntMatrix M(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) M.at(i, j) = rows[i][j];
    return M;
}

Json iso_pair(const SmoothFanoPolytope& A, const SmoothFanoPolytope& B, const RunConfig& cfg, std::string& text) {
    Json j;
    j["a"] = id_json(A);
    j["b"] = id_json(B);
    auto da = degree_anticanonical(A), db = degree_anticanonical(B);
    j["degrees"] = Json::array({da.get_si(), db.get_si()});
    bool gate = da == db;
    j["degree_gate"] = gate;
    std::ostringstream t;
    t << display_id(A) << " -> " << display_id(B) << ": degrees " << da.get_str() << ", " << db.get_str();
    auto pa = build_presentation(A), pb = build_presentation(B);
    if (!cfg.map.empty()) {
        auto L = parse_matrix(cfg.map);
        if (static_cast<int>(L.rows()) != pa.num_generators() || pa.num_generators() != pb.num_generators())
            throw UsageError("--map size does not match the number of generators");
        bool valid = is_ring_isomorphism(pa, pb, L);
        Json m;
        m["L"] = matrix_json(L);
        m["ring_isomorphism"] = valid;
        t << "\n  map " << L.to_string() << ": ";
        if (valid) {
            bool c1 = check_c1_preserving(L, pa, pb, cfg.relaxed_c1);
            bool pont = check_pontryagin_preserving(L, pa, pb);
            m["c1_preserving"] = c1;
            m["pontryagin_preserving"] = pont;
            t << "ring isomorphism, c1 " << (c1 ? "preserved" : "not preserved") << ", Pontryagin "
              << (pont ? "preserved" : "not preserved");
        } else {
            t << "not a ring isomorphism";
        }
        j["map"] = m;
    }
    std::string conclusion;
    if (!gate) {
        conclusion = "degrees differ: no c1-preserving isomorphism";
    } else if (A.dim() != B.dim() || pa.num_generators() != pb.num_generators()) {
        conclusion = "ranks differ: not isomorphic";
    } else {
        IsoSearchOptions io;
        io.bound = cfg.bound > 0 ? cfg.bound : 2;
        auto isos = find_ring_isos_bounded(pa, pb, io);
        Json arr = Json::array();
        bool any_c1 = false;
        for (auto& w : isos) {
            if (cfg.relaxed_c1) w.c1_preserving = check_c1_preserving(w.L, pa, pb, true);
            any_c1 = any_c1 || w.c1_preserving;
            arr.push_back(iso_json(w));
        }
        j["bound"] = io.bound;
        j["isomorphisms"] = arr;
        j["count"] = isos.size();
        if (isos.empty())
            conclusion = "no isomorphism with entries in [-" + std::to_string(io.bound) + "," +
                         std::to_string(io.bound) + "]";
        else if (any_c1)
            conclusion = "c1-preserving isomorphism found";
        else
            conclusion = std::to_string(isos.size()) + " isomorphisms with entries in [-" + std::to_string(io.bound) +
                         "," + std::to_string(io.bound) + "], none c1-preserving";
    }
    j["conclusion"] = conclusion;
    t << "\n  " << conclusion << '\n';
    text = t.str();
    return j;
}

Outcome cmd_iso(const RunConfig& cfg) {
    auto all = load_inputs(cfg);
    std::vector<std::pair<SmoothFanoPolytope, SmoothFanoPolytope>> pairs;
    if (!cfg.ids.empty()) {
        if (cfg.ids.size() != 2) throw UsageError("iso takes exactly two ids");
        auto sel = select(all, cfg.ids);
        pairs.emplace_back(sel[0], sel[1]);
    } else {
        if (!cfg.map.empty()) throw UsageError("--map needs --ids");
        auto keys = fingerprint_keys(all, cfg);
        ClassifyOptions opt;
        opt.fingerprint_keys = keys;
        auto part = classify(all, Relation::FingerprintEqual, opt);
        for (const auto& c : part.classes)
            for (std::size_t x = 0; x < c.size(); ++x)
                for (std::size_t y = x + 1; y < c.size(); ++y) pairs.emplace_back(all[c[x]], all[c[y]]);
    }
    std::vector<Json> results(pairs.size());
    std::vector<std::string> texts(pairs.size());
    parallel_for(pairs.size(), cfg.jobs,
                 [&](std::size_t i) { results[i] = iso_pair(pairs[i].first, pairs[i].second, cfg, texts[i]); });
    Outcome out;
    out.json["pairs"] = Json::array();
    for (auto& r : results) out.json["pairs"].push_back(std::move(r));
    out.text = pairs.empty() ? "no fingerprint-equal pairs\n" : join(texts, "");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smooth toric Fano polytopes: cohomology invariants and classification"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    std::string ids_arg, mod_arg;

    struct Cmd {
        const char* name;
        const char* help;
        Outcome (*run)(const RunConfig&);
    };
    const Cmd cmds[] = {
        {"validate", "check every record of the input files", cmd_validate},
        {"invariants", "presentation, Groebner basis, k-v.e., mbn and degree per polytope", cmd_invariants},
        {"classify", "sign / unimodular / fingerprint partitions and the anomaly list", cmd_classify},
        {"degrees", "anticanonical degrees, cross-checked against the ring computation", cmd_degrees},
        {"iso", "degree gate and bounded ring isomorphism search", cmd_iso},
    };
    std::vector<CLI::App*> subs;
    for (const auto& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--input", cfg.inputs, "polytope file(s); default: bundled fixtures");
        sub->add_option("--output", cfg.output, "write the JSON report here ('-' for stdout)");
        sub->add_option("--id,--ids", ids_arg, "comma-separated polytope ids");
        sub->add_option("--bound", cfg.bound, "coefficient bound B")->check(CLI::PositiveNumber);
        sub->add_option("--mod", mod_arg, "comma-separated primes from {2,3,5,7}");
        sub->add_option("--relation", cfg.relation, "sign, unimodular, fingerprint or all")
            ->check(CLI::IsMember({"all", "sign", "unimodular", "fingerprint"}));
        sub->add_option("--golden", cfg.golden, "JSON file the report must match");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--map", cfg.map, "iso: matrix 'r1;r2;...' to verify, columns are generator images");
        sub->add_flag("--relaxed-c1", cfg.relaxed_c1, "iso: accept L(c1) = -c1");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.ids = parse_int_list(ids_arg);
        if (!mod_arg.empty()) {
            cfg.primes = parse_int_list(mod_arg);
            for (int p : cfg.primes)
                if (p != 2 && p != 3 && p != 5 && p != 7) throw UsageError("--mod primes must lie in {2,3,5,7}");
        }
        const Cmd* cmd = nullptr;
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed()) cmd = &cmds[i];

        Outcome res = cmd->run(cfg);
        Json report;
        report["schema"] = kReportSchema;
        report["command"] = cmd->name;
        for (auto it = res.json.begin(); it != res.json.end(); ++it) report[it.key()] = it.value();

        if (cfg.output == "-") {
            std::cout << report.dump(2) << '\n';
        } else {
            std::cout << res.text;
            if (!cfg.output.empty()) {
                std::ofstream f(cfg.output);
                if (!f) throw UsageError("cannot write " + cfg.output);
                f << report.dump(2) << '\n';
            }
        }
        int status = res.ok ? 0 : 1;
        if (!cfg.golden.empty()) {
            Json expected;
            try {
                expected = Json::parse(read_text_file(cfg.golden));
            } catch (const std::exception& e) {
                throw UsageError(std::string("golden file: ") + e.what());
            }
            auto bad = golden_mismatches(expected, report);
            for (const auto& path : bad) std::cerr << "golden mismatch at " << path << '\n';
            if (!bad.empty()) status = 1;
        }
        return status;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
