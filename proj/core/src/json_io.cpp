#include "qv/json_io.hpp"

#include <json.hpp>

namespace qv {

using nlohmann::json;

namespace {

void require_schema(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: top level must be an object");
    if (!j.contains("schema") || j.at("schema") != kSchema)
        throw std::invalid_argument(std::string("json: expected schema \"") + kSchema + "\"");
}

GraphSpec graph_from_json(const json& j) {
    GraphSpec g;
    g.n = j.at("n").get<int>();
    g.d = j.at("d").get<int>();
    for (const auto& e : j.value("edges", json::array())) {
        GraphEdge edge;
        edge.vertices = e.at("vertices").get<std::vector<int>>();
        edge.weight = e.value("weight", 1);
        if (e.contains("exponents")) edge.exponents = e.at("exponents").get<std::vector<int>>();
        g.edges.push_back(std::move(edge));
    }
    g.validate();
    return g;
}

json graph_to_json(const GraphSpec& g) {
    json edges = json::array();
    for (const auto& e : g.edges) {
        json je{{"vertices", e.vertices}, {"weight", e.weight}};
        if (!e.exponents.empty()) je["exponents"] = e.exponents;
        edges.push_back(std::move(je));
    }
    return json{{"n", g.n}, {"d", g.d}, {"edges", std::move(edges)}};
}

GateSpec gate_from_json(const json& j) {
    GateSpec g;
    g.kind = gate_kind_from_name(j.at("kind").get<std::string>());
    g.targets = j.at("targets").get<std::vector<int>>();
    g.weight = j.value("weight", 1);
    g.power = j.value("power", 1);
    g.theta = j.value("theta", 0.0);
    if (j.contains("thetas")) g.thetas = j.at("thetas").get<std::vector<double>>();
    if (j.contains("exponents")) g.exponents = j.at("exponents").get<std::vector<int>>();
    return g;
}

json gate_to_json(const GateSpec& g) {
    json j{{"kind", gate_kind_name(g.kind)}, {"targets", g.targets}};
    switch (g.kind) {
        case GateKind::PoweredZ: j["power"] = g.power; break;
        case GateKind::Ry: j["theta"] = g.theta; break;
        case GateKind::GivensChain: j["thetas"] = g.thetas; break;
        case GateKind::CZ:
        case GateKind::HyperCZ: j["weight"] = g.weight; break;
        case GateKind::MultiCZ:
        case GateKind::MultiHyperCZ:
            j["weight"] = g.weight;
            j["exponents"] = g.exponents;
            break;
        default: break;
    }
    return j;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

}  // namespace

StateSpec state_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json: parse error: ") + e.what());
    }
    require_schema(j);
    StateSpec spec;
    try {
        spec.family = family_from_name(j.at("family").get<std::string>());
        switch (spec.family) {
            case Family::Psi1:
            case Family::Psi3: break;
            case Family::BellLike: spec.theta = j.at("theta").get<double>(); break;
            case Family::GHZ:
                spec.n = j.at("n").get<int>();
                spec.d = j.at("d").get<int>();
                break;
            case Family::GHZLikeQubit:
                spec.n = j.at("n").get<int>();
                spec.theta = j.at("theta").get<double>();
                break;
            case Family::GHZLikeQudit:
                spec.n = j.at("n").get<int>();
                spec.d = j.at("d").get<int>();
                spec.thetas = j.at("thetas").get<std::vector<double>>();
                break;
            case Family::Graph: spec.graph = graph_from_json(j.at("graph")); break;
            case Family::Custom:
                spec.custom_dims = j.at("dims").get<std::vector<int>>();
                for (const auto& g : j.at("gates")) spec.circuit.push_back(gate_from_json(g));
                break;
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json: bad state spec: ") + e.what());
    }
    return spec;
}

std::string state_spec_to_json(const StateSpec& spec) {
    json j{{"schema", kSchema}, {"family", family_name(spec.family)}};
    switch (spec.family) {
        case Family::Psi1:
        case Family::Psi3: break;
        case Family::BellLike: j["theta"] = spec.theta; break;
        case Family::GHZ:
            j["n"] = spec.n;
            j["d"] = spec.d;
            break;
        case Family::GHZLikeQubit:
            j["n"] = spec.n;
            j["theta"] = spec.theta;
            break;
        case Family::GHZLikeQudit:
            j["n"] = spec.n;
            j["d"] = spec.d;
            j["thetas"] = spec.thetas;
            break;
        case Family::Graph: j["graph"] = graph_to_json(spec.graph); break;
        case Family::Custom: {
            j["dims"] = spec.custom_dims;
            json gates = json::array();
            for (const auto& g : spec.circuit) gates.push_back(gate_to_json(g));
            j["gates"] = std::move(gates);
            break;
        }
    }
    return j.dump(2);
}

TestPartition partition_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("json: parse error: ") + e.what());
    }
    require_schema(j);
    TestPartition p;
    try {
        p.dims = HybridDims(j.at("dims").get<std::vector<int>>());
        for (const auto& s : j.at("subsets")) {
            TestSubset subset;
            subset.note = s.value("note", "");
            for (const auto& t : s.at("tuples"))
                subset.tuples.push_back(t.get<ExponentTuple>());
            p.subsets.push_back(std::move(subset));
        }
        for (const auto& m : j.at("mu")) p.mu.push_back(Rational::parse(m.get<std::string>()));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json: bad partition: ") + e.what());
    }
    validate_partition(p);
    return p;
}

std::string partition_to_json(const TestPartition& p) {
    json subsets = json::array();
    for (const auto& s : p.subsets) {
        json tuples = json::array();
        for (const auto& t : s.tuples) tuples.push_back(t);
        subsets.push_back(json{{"tuples", std::move(tuples)}, {"note", s.note}});
    }
    json j{{"schema", kSchema},
           {"dims", p.dims.dims()},
           {"subsets", std::move(subsets)},
           {"mu", rationals_to_json(p.mu)}};
    return j.dump(2);
}

std::string state_metadata_json(const StateSpec& spec, const BuiltState& state) {
    json j{{"schema", kSchema},
           {"family", family_name(spec.family)},
           {"dims", state.dims.dims()},
           {"total_dimension", state.dims.total()},
           {"norm", state.psi.amps.norm()}};
    return j.dump(2);
}

std::string verification_report_json(const StateSpec& spec, const TestPartition& p,
                                     const WeightOptimum& opt, const VerificationOperator& v,
                                     double epsilon, double delta) {
    json subsets = json::array();
    for (const auto& s : p.subsets)
        subsets.push_back(json{{"size", s.tuples.size()}, {"note", s.note}});

    const SampleCount samples = n_opt(opt.nu_float, epsilon, delta);
    const Spectrum spectrum = hermitian_spectrum(v.omega);
    json head = json::array();
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(spectrum.values.size(), 8); ++i)
        head.push_back(spectrum.values(i));

    json j{{"schema", kSchema},
           {"family", family_name(spec.family)},
           {"dims", p.dims.dims()},
           {"tau", p.tau()},
           {"subsets", std::move(subsets)},
           {"mu", rationals_to_json(opt.exact ? opt.mu : p.mu)},
           {"mu_exact", opt.exact},
           {"beta", opt.exact ? json(opt.beta.str()) : json(opt.beta_float)},
           {"nu", opt.nu_float},
           {"epsilon", epsilon},
           {"delta", delta},
           {"n_opt", json{{"exact", samples.exact}, {"bound", samples.bound}}},
           {"omega_spectrum_head", std::move(head)}};
    return j.dump(2);
}

std::string protocol_report_json(const ProtocolReport& report, const std::string& source_kind) {
    json j{{"schema", kSchema},
           {"source", source_kind},
           {"seed", report.seed},
           {"trials", report.trials},
           {"copies", report.copies},
           {"rounds", report.rounds},
           {"round_passes", report.round_passes},
           {"pass_frequency", report.pass_frequency},
           {"pass_frequency_sigma", report.pass_frequency_sigma},
           {"accepted_trials", report.accepted_trials},
           {"acceptance", report.acceptance},
           {"acceptance_sigma", report.acceptance_sigma},
           {"passes_per_trial", report.passes_per_trial}};
    return j.dump(2);
}

}  // namespace qv
