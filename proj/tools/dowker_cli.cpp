#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <dowker/dowker.hpp>

using namespace dowker;

namespace {

Json sorted_ids(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    return Json(ids);
}

Json ids_json(const Universe& u, const Bits& b) { return sorted_ids(u.ids_of(b)); }

Json complex_json(const SimplicialComplex& s) {
    Json out;
    out["void"] = s.is_void();
    out["empty"] = s.is_empty_complex();
    Json facets = Json::array();
    if (!s.is_void()) {
        std::vector<Json> rows;
        for (const auto& m : s.maximal_simplices()) rows.push_back(ids_json(s.universe(), m));
        std::sort(rows.begin(), rows.end(),
                  [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
        for (auto& r : rows) facets.push_back(r);
    }
    out["facets"] = facets;
    return out;
}

Json betti_json(const BettiVector& bv) {
    Json out;
    out["void"] = bv.void_complex;
    out["empty"] = bv.empty_complex;
    out["betti"] = bv.betti;
    return out;
}

void emit(const Json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot write " + out_path);
    out << text;
}

Json report_header(const std::string& command, const std::string& input) {
    Json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["input"] = input;
    return doc;
}

void run_analyze(const std::string& path, const std::string& out_path) {
    Relation r = load_relation(path);
    Json doc = report_header("analyze", path);
    doc["individuals"] = r.individuals().ids();
    doc["attributes"] = r.attributes().ids();
    doc["pair_count"] = r.pair_count();
    doc["tight"] = r.is_tight();
    doc["connected"] = r.is_connected();
    doc["attribute_privacy"] = r.preserves_attribute_privacy();
    doc["association_privacy"] = r.preserves_association_privacy();
    auto phi = dowker_attribute_complex(r);
    doc["attribute_complex"] = complex_json(phi);
    Json free = Json::array();
    for (const auto& f : phi.free_faces()) free.push_back(ids_json(r.attributes(), f));
    doc["free_faces"] = free;
    Json ident = Json::array();
    for (const auto& xi : r.individuals().ids())
        if (r.uniquely_identifiable(xi)) ident.push_back(xi);
    doc["uniquely_identifiable"] = ident;
    if (r.is_tight()) {
        Json shapes = Json::array();
        for (PrivacyShape s : classify_privacy_shape(r)) shapes.push_back(to_string(s));
        doc["component_shapes"] = shapes;
    }
    Json disinfo = Json::array();
    for (const auto& [x, y] : suggest_disinformation(r)) disinfo.push_back({x, y});
    doc["disinformation_suggestions"] = disinfo;
    emit(doc, out_path);
}

void run_lattice(const std::string& path, std::size_t chain_cap, const std::string& out_path) {
    Relation r = load_relation(path);
    GaloisLattice lat(r);
    Json doc = report_header("lattice", path);
    Json elems = Json::array();
    for (const auto& e : lat.elements()) {
        Json el;
        el["sigma"] = ids_json(r.individuals(), e.sigma);
        el["gamma"] = ids_json(r.attributes(), e.gamma);
        elems.push_back(el);
    }
    doc["elements"] = elems;
    doc["proper_count"] = lat.proper().size();
    doc["length"] = lat.length();
    doc["top_adjoined"] = lat.top_adjoined();
    doc["bottom_adjoined"] = lat.bottom_adjoined();
    doc["maximal_chains"] = doubly_labeled_poset(r).poset.count_maximal_chains().str();
    doc["chain_cap"] = chain_cap;
    emit(doc, out_path);
}

void run_iars(const std::string& path, const std::string& individual, std::size_t node_cap,
              const std::string& out_path) {
    Relation r = load_relation(path);
    Json doc = report_header("iars", path);
    if (individual.empty()) {
        auto [len, seq] = longest_iars(r);
        doc["longest_length"] = len;
        doc["longest_sequence"] = seq;
    } else {
        doc["individual"] = individual;
        Bits sigma(r.nx());
        sigma.set(r.individuals().index(individual));
        auto res = min_identifying_set(r, sigma, node_cap);
        if (!res.best) fail(errc::cap_exceeded, "search truncated; raise --node-cap");
        doc["r_fast"] = res.best->count();
        doc["r_fast_witness"] = ids_json(r.attributes(), *res.best);
        doc["r_slow"] = r_slow(r, sigma);
        auto [len, seqs] = identifying_iars(r, individual);
        doc["max_length"] = len;
        Json out_seqs = Json::array();
        for (const auto& s : seqs) out_seqs.push_back(s);
        doc["max_length_sequences"] = out_seqs;
    }
    emit(doc, out_path);
}

void run_homology(const std::string& path, int max_dim, const std::string& out_path) {
    Relation r = load_relation(path);
    Json doc = report_header("homology", path);
    doc["attribute_complex"] = betti_json(reduced_betti(dowker_attribute_complex(r), max_dim));
    doc["association_complex"] = betti_json(reduced_betti(dowker_association_complex(r), max_dim));
    emit(doc, out_path);
}

void run_link(const std::string& path, const std::string& individual, bool all,
              const std::string& scatter_csv, const std::string& out_path) {
    Relation r = load_relation(path);
    if (!all && individual.empty())
        fail(errc::unknown_id, "link needs --individual or --all");
    std::vector<std::string> filter;
    if (!all) filter.push_back(individual);
    auto records = link_survey(r, filter);
    auto points = scatter_measures(records);
    Json doc = report_header("link", path);
    Json recs = Json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
        Json rec;
        rec["individual"] = records[i].individual;
        rec["betti"] = betti_json(records[i].betti);
        rec["contractible"] = records[i].contractible;
        rec["longest_iars_length"] = records[i].longest_iars_length;
        rec["isotropic_counts"] = records[i].isotropic_counts;
        rec["h"] = points[i].h.str();
        rec["i"] = points[i].i.str();
        rec["h_scaled"] = points[i].h_scaled;
        rec["i_scaled"] = points[i].i_scaled;
        recs.push_back(rec);
    }
    doc["records"] = recs;
    if (!scatter_csv.empty()) {
        std::ofstream out(scatter_csv, std::ios::binary);
        if (!out) fail(errc::parse_error, "cannot write " + scatter_csv);
        out << "individual,h,i,link_size\n";
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::size_t x = r.individuals().index(records[i].individual);
            out << records[i].individual << "," << points[i].h << "," << points[i].i << ","
                << r.row(x).count() << "\n";
        }
        doc["scatter_csv"] = scatter_csv;
    }
    emit(doc, out_path);
}

void run_strategy(const std::string& path, const std::string& goal, const std::string& out_path) {
    UncertainGraph g = parse_graph_json(read_file(path));
    Universe au = g.action_universe(), sv = g.state_universe();
    Json doc = report_header("strategy", path);
    Relation a = action_relation(g);
    Json strategies = Json::array();
    for (std::size_t i = 0; i < a.nx(); ++i) {
        Json s;
        s["id"] = a.individuals().id(i);
        s["actions"] = ids_json(au, a.row(i));
        s["goals"] = ids_json(sv, goal_states(g, a.row(i)));
        strategies.push_back(s);
    }
    doc["maximal_strategies"] = strategies;
    doc["source_complex"] = complex_json(source_complex(g));
    doc["fully_controllable"] = fully_controllable(g);
    if (!goal.empty()) doc["goal_delay_sequence"] = goal_delay_sequence(g, goal);
    emit(doc, out_path);
}

RelationMorphism parse_morphism_json(const std::string& text) {
    Json d;
    try {
        d = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(errc::parse_error, std::string("bad json: ") + e.what());
    }
    for (const char* k : {"domain", "codomain", "fx", "fy"})
        if (!d.contains(k)) fail(errc::parse_error, std::string("missing field: ") + k);
    RelationMorphism m;
    m.domain = parse_relation(d["domain"].dump(), RelationFormat::json);
    m.codomain = parse_relation(d["codomain"].dump(), RelationFormat::json);
    for (auto it = d["fx"].begin(); it != d["fx"].end(); ++it)
        m.fx[it.key()] = it.value().get<std::string>();
    for (auto it = d["fy"].begin(); it != d["fy"].end(); ++it)
        m.fy[it.key()] = it.value().get<std::string>();
    return m;
}

void run_morphism(const std::string& path, const std::string& out_path) {
    RelationMorphism m = parse_morphism_json(read_file(path));
    Json doc = report_header("morphism", path);
    auto [ok, violations] = validate_morphism(m);
    doc["valid"] = ok;
    doc["violations"] = violations;
    if (ok) {
        auto rep = induced_simplicial_maps(m);
        Json flags;
        flags["fx_injective"] = rep.fx_injective;
        flags["fx_surjective"] = rep.fx_surjective;
        flags["fy_injective"] = rep.fy_injective;
        flags["fy_surjective"] = rep.fy_surjective;
        flags["pair_injective"] = rep.pair_injective;
        flags["pair_surjective"] = rep.pair_surjective;
        flags["psi_map_surjective"] = rep.psi_map_surjective;
        flags["phi_map_surjective"] = rep.phi_map_surjective;
        flags["mono"] = to_string(rep.mono);
        flags["epi"] = to_string(rep.epi);
        doc["induced_maps"] = flags;
        auto g = g_morphisms(m);
        Json table = Json::array();
        for (std::size_t i = 0; i < g.domain_poset.elements.size(); ++i) {
            Json row;
            row["sigma"] = ids_json(m.domain.individuals(), g.domain_poset.elements[i].sigma);
            row["fxg_sigma"] = ids_json(m.codomain.individuals(), g.fxg[i].sigma);
            row["fxg_gamma"] = ids_json(m.codomain.attributes(), g.fxg[i].gamma);
            row["fyg_sigma"] = ids_json(m.codomain.individuals(), g.fyg[i].sigma);
            row["fyg_gamma"] = ids_json(m.codomain.attributes(), g.fyg[i].gamma);
            table.push_back(row);
        }
        doc["g_morphisms"] = table;
    }
    emit(doc, out_path);
}

void run_encode(const std::string& path, const std::vector<std::string>& fields,
                const std::string& out_path) {
    Json d;
    try {
        d = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        fail(errc::parse_error, std::string("bad json: ") + e.what());
    }
    if (!d.is_array()) fail(errc::parse_error, "encode input must be a json array of records");
    std::vector<std::unordered_map<std::string, std::string>> records;
    for (const auto& rec : d) {
        std::unordered_map<std::string, std::string> row;
        for (auto it = rec.begin(); it != rec.end(); ++it)
            row[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                   : it.value().dump();
        records.push_back(row);
    }
    auto enc = encode_multivalent(records, fields);
    Json doc = report_header("encode", path);
    doc["relation"] = Json::parse(serialize_relation(enc.relation, RelationFormat::json));
    doc["multiplicity"] = enc.multiplicity;
    emit(doc, out_path);
}

void run_embed(const std::string& pattern_path, const std::string& host_path,
               const std::string& out_path) {
    auto pattern = dowker_attribute_complex(load_relation(pattern_path));
    auto host = dowker_attribute_complex(load_relation(host_path));
    auto embeddings = enumerate_embeddings(pattern, host);
    Json doc = report_header("embed", pattern_path + " -> " + host_path);
    doc["count"] = embeddings.size();
    Json maps = Json::array();
    for (const auto& e : embeddings) {
        Json vm;
        for (const auto& [p, h] : e.vertex_map) vm[p] = h;
        maps.push_back(vm);
    }
    doc["vertex_maps"] = maps;
    emit(doc, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological privacy analysis of finite binary relations"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to a file instead of stdout");

    std::string rel_path, individual, goal, scatter_csv, host_path;
    std::vector<std::string> fields;
    bool all = false;
    int max_dim = -1;
    std::size_t chain_cap = 1u << 20, node_cap = 1u << 20;

    auto* analyze = app.add_subcommand("analyze", "privacy flags, free faces, and shapes");
    analyze->add_option("relation", rel_path, "relation file (.csv/.pairs/.json)")->required();

    auto* lattice = app.add_subcommand("lattice", "closure pairs and the bounded lattice");
    lattice->add_option("relation", rel_path)->required();
    lattice->add_option("--chain-cap", chain_cap, "maximal chain enumeration cap (default 2^20)");

    auto* iars = app.add_subcommand("iars", "informative release sequences and lengths");
    iars->add_option("relation", rel_path)->required();
    iars->add_option("--individual", individual, "target individual id");
    iars->add_option("--node-cap", node_cap, "search node cap for r_fast (default 2^20)");

    auto* homology = app.add_subcommand("homology", "reduced Betti numbers over GF(2)");
    homology->add_option("relation", rel_path)->required();
    homology->add_option("--max-dim", max_dim, "truncate homology at this dimension (default all)");

    auto* link = app.add_subcommand("link", "per-individual link survey and scatter measures");
    link->add_option("relation", rel_path)->required();
    link->add_option("--individual", individual, "survey a single individual");
    link->add_flag("--all", all, "survey every uniquely identifiable individual");
    link->add_option("--scatter-csv", scatter_csv, "also export h,i measures as CSV");

    auto* strategy = app.add_subcommand("strategy", "strategy complex of an uncertain graph");
    strategy->add_option("graph", rel_path, "graph file (.json)")->required();
    strategy->add_option("--goal", goal, "emit a goal-delay sequence for this state");

    auto* morphism = app.add_subcommand("morphism", "validate and map a relation morphism");
    morphism->add_option("morphism", rel_path, "morphism file (.json)")->required();

    auto* encode = app.add_subcommand("encode", "flatten multivalent records to a relation");
    encode->add_option("records", rel_path, "records file (.json array)")->required();
    encode->add_option("--fields", fields, "fields to encode, in order")->required();

    auto* embed = app.add_subcommand("embed", "embeddings of one attribute complex in another");
    embed->add_option("pattern", rel_path)->required();
    embed->add_option("host", host_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) run_analyze(rel_path, out_path);
        if (*lattice) run_lattice(rel_path, chain_cap, out_path);
        if (*iars) run_iars(rel_path, individual, node_cap, out_path);
        if (*homology) run_homology(rel_path, max_dim, out_path);
        if (*link) run_link(rel_path, individual, all, scatter_csv, out_path);
        if (*strategy) run_strategy(rel_path, goal, out_path);
        if (*morphism) run_morphism(rel_path, out_path);
        if (*encode) run_encode(rel_path, fields, out_path);
        if (*embed) run_embed(rel_path, host_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
