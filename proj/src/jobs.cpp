#include "diffmod/jobs.hpp"

#include "diffmod/mellin_local.hpp"
#include "diffmod/parse.hpp"

namespace diffmod {

namespace {

Orbit orbit_from_json(const Json& j) { return Orbit(rat_from_json(j)); }

struct ModuleInput {
    DConnection conn;
    Lattice lattice;
};

ModuleInput module_input(const Json& job) {
    if (!job.contains("A")) throw ParseError("job needs a connection matrix \"A\"");
    DConnection conn = connection_from_json(job.at("A"));
    Lattice l = job.contains("L") ? lattice_from_json(job.at("L"), conn.rank())
                                  : Lattice::standard(conn.rank());
    return {std::move(conn), std::move(l)};
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["fg_over_tau"] = c.fg_over_tau;
    j["fg_over_tau_inv"] = c.fg_over_tau_inv;
    j["vector_bundle"] = c.vector_bundle;
    Json per = Json::object();
    for (const auto& [rep, lr] : c.per_orbit) {
        Json o;
        o["left"] = partition_to_json(lr.first);
        o["right"] = partition_to_json(lr.second);
        per[rat_to_string(rep)] = std::move(o);
    }
    j["per_orbit"] = std::move(per);
    if (c.witness) j["witness"] = lattice_to_json(*c.witness);
    return j;
}

Json cmd_analyze(const Json& job) {
    ModuleInput in = module_input(job);
    Json out;
    out["rank"] = in.conn.rank();
    ZeroPoleProfile prof = zero_pole_profile(in.conn, in.lattice);
    out["profile"] = profile_to_json(prof);
    Json orbs = Json::array();
    for (const Orbit& o : singular_orbits(prof)) orbs.push_back(rat_to_string(o.rep));
    out["orbits"] = std::move(orbs);
    out["classification"] = classification_to_json(classify_module(in.conn, in.lattice));
    return out;
}

Json cmd_austere(const Json& job) {
    ModuleInput in = module_input(job);
    if (!job.contains("orbit")) throw ParseError("austere job needs \"orbit\"");
    Orbit orbit = orbit_from_json(job.at("orbit"));
    AustereResult res = austere_reduce(in.conn, in.lattice, orbit);
    Json out;
    out["orbit"] = rat_to_string(orbit.rep);
    out["iterations"] = res.iterations;
    Json trace = Json::array();
    for (const Lattice& l : res.trace) {
        Json step;
        step["lattice"] = lattice_to_json(l);
        step["profile"] = profile_to_json(zero_pole_profile(in.conn, l));
        trace.push_back(std::move(step));
    }
    out["trace"] = std::move(trace);
    out["separated"] = austere_separated(zero_pole_profile(in.conn, res.lattice), orbit);
    out["lattice"] = lattice_to_json(res.lattice);
    return out;
}

Json triple_report(const DiskTriple& t) {
    Json out;
    out["orbit"] = rat_to_string(t.orbit.rep);
    out["left"] = partition_to_json(side_partition(t, Side::Left));
    out["right"] = partition_to_json(side_partition(t, Side::Right));
    out["middle_torsion"] = partition_to_json(t.middle_torsion);
    out["stable_shift"] = t.stable_shift;
    out["rank"] = t.rank;
    out["base"] = rat_to_string(t.base);
    out["left_matrix"] = matrix_to_json(t.left.generators());
    out["middle_matrix"] = matrix_to_json(t.middle.generators());
    out["right_matrix"] = matrix_to_json(t.right.generators());
    return out;
}

Json cmd_restrict(const Json& job) {
    ModuleInput in = module_input(job);
    if (!job.contains("orbit")) throw ParseError("restrict job needs \"orbit\"");
    Orbit orbit = orbit_from_json(job.at("orbit"));
    long shift = job.contains("shift") ? job.at("shift").get<long>() : 0;
    return triple_report(restrict_to_orbit(in.conn, in.lattice, orbit, shift));
}

Json cmd_vanishing(const Json& job) {
    if (!job.contains("orbit")) throw ParseError("vanishing job needs \"orbit\"");
    Orbit orbit = orbit_from_json(job.at("orbit"));
    Json out;
    if (job.contains("op")) {
        DifferenceOperator q = parse_difference_operator(job.at("op").get<std::string>());
        OperatorCycles c = operator_vanishing_cycles(q, orbit);
        out["left"] = partition_to_json(c.left.partition);
        out["right"] = partition_to_json(c.right.partition);
        return out;
    }
    ModuleInput in = module_input(job);
    DiskTriple t = restrict_to_orbit(in.conn, in.lattice, orbit);
    out["left"] = partition_to_json(side_partition(t, Side::Left));
    out["right"] = partition_to_json(side_partition(t, Side::Right));
    return out;
}

Json cmd_glue(const Json& job) {
    ModuleInput in = module_input(job);
    if (!job.contains("orbit")) throw ParseError("glue job needs \"orbit\"");
    Orbit orbit = orbit_from_json(job.at("orbit"));
    long shift = job.contains("shift") ? job.at("shift").get<long>() : 0;
    DiskTriple t = restrict_to_orbit(in.conn, in.lattice, orbit, shift);
    Lattice glued = glue(in.conn, t.middle, t);
    bool ok = glued == t.middle && round_trip_check(in.conn, in.lattice, orbit, shift);
    Json out;
    out["orbit"] = rat_to_string(orbit.rep);
    out["stable_shift"] = t.stable_shift;
    out["round_trip"] = ok;
    out["glued"] = lattice_to_json(glued);
    return out;
}

Json cmd_factor(const Json& job, const JobOptions& opts) {
    if (!job.contains("B")) throw ParseError("factor job needs a matrix \"B\"");
    RatFuncMatrix b = matrix_from_json(job.at("B"));
    Rat point = job.contains("point") ? rat_from_json(job.at("point")) : Rat(0);
    long order = job.contains("order") ? job.at("order").get<long>() : opts.order;
    BirkhoffFactors f = birkhoff_factor_rational(b, point, order);
    LaurentMatrix bt(b.rows(), b.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) bt(i, j) = laurent_expand(b(i, j), point, order);
    Json out;
    out["point"] = rat_to_string(point);
    out["order"] = order;
    Json am = Json::array();
    for (int i = 0; i < f.series.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < f.series.cols(); ++j) row.push_back(laurent_trunc_to_json(f.series(i, j)));
        am.push_back(std::move(row));
    }
    out["A"] = std::move(am);
    Json cm = Json::array();
    for (int i = 0; i < f.laurent.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < f.laurent.cols(); ++j) row.push_back(laurent_poly_to_json(f.laurent(i, j)));
        cm.push_back(std::move(row));
    }
    out["C"] = std::move(cm);
    out["val_det_A"] = 0;
    out["val_det_C"] = f.val_det_laurent;
    out["product_matches"] = birkhoff_product_matches(f, bt);
    return out;
}

Json cmd_mellin_op(const Json& job) {
    if (!job.contains("op")) throw ParseError("mellin-op job needs \"op\"");
    std::string text = job.at("op").get<std::string>();
    std::string direction;
    if (job.contains("direction")) direction = job.at("direction").get<std::string>();
    else if (mentions_differential_symbols(text)) direction = "to-difference";
    else direction = "to-differential";
    Json out;
    if (direction == "to-difference") {
        DifferenceOperator q = mellin_operator(parse_differential_operator(text));
        out["result"] = q.to_string();
    } else if (direction == "to-differential") {
        DifferentialOperator d = inverse_mellin_operator(parse_difference_operator(text));
        out["result"] = d.to_string();
    } else {
        throw ParseError("direction must be \"to-difference\" or \"to-differential\"");
    }
    return out;
}

Json cmd_local_mellin(const Json& job) {
    if (!job.contains("C")) throw ParseError("local-mellin job needs a matrix \"C\"");
    RatMatrix c = rat_matrix_from_json(job.at("C"));
    Rat p = job.contains("p") ? rat_from_json(job.at("p")) : Rat(0);
    bool at_infinity = job.contains("at_infinity") && job.at("at_infinity").get<bool>();
    FiniteLengthModule m = at_infinity ? local_mellin_infinity(c, p)
                                       : local_mellin(RegSingModule(c, Orbit(p)));
    Json out;
    out["partition"] = partition_to_json(m.partition);
    return out;
}

} // namespace

Json run_job(const Json& job, const JobOptions& opts) {
    if (!job.is_object() || !job.contains("cmd"))
        throw ParseError("job must be an object with a \"cmd\" field");
    const std::string cmd = job.at("cmd").get<std::string>();
    if (cmd == "analyze") return cmd_analyze(job);
    if (cmd == "austere") return cmd_austere(job);
    if (cmd == "restrict") return cmd_restrict(job);
    if (cmd == "vanishing") return cmd_vanishing(job);
    if (cmd == "glue") return cmd_glue(job);
    if (cmd == "factor") return cmd_factor(job, opts);
    if (cmd == "mellin-op") return cmd_mellin_op(job);
    if (cmd == "local-mellin") return cmd_local_mellin(job);
    throw ParseError("unknown cmd \"" + cmd + "\"");
}

std::pair<std::string, int> run_job_text(const std::string& text, const JobOptions& opts,
                                         int indent) {
    auto dump = [indent](const Json& j) {
        return indent >= 0 ? j.dump(indent) : j.dump();
    };
    Json err;
    try {
        Json job = Json::parse(text);
        return {dump(run_job(job, opts)), 0};
    } catch (const DomainError& e) {
        err["error"] = e.code();
        err["detail"] = e.what();
        return {dump(err), 1};
    } catch (const ParseError& e) {
        err["error"] = "ParseError";
        err["detail"] = e.what();
        return {dump(err), 2};
    } catch (const Json::exception& e) {
        err["error"] = "ParseError";
        err["detail"] = e.what();
        return {dump(err), 2};
    }
}

} // namespace diffmod
