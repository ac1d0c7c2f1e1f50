#include "yangirr/cli.hpp"

#include "yangirr/errors.hpp"
#include "yangirr/yangian.hpp"

#include <algorithm>
#include <sstream>

namespace yangirr::cli {

namespace {

Weight parse_weight(const json& j, const char* name) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, std::string(name) + " must be an array of integers");
    Weight w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string(name) + " must contain integers");
        w.push_back(x.get<int>());
    }
    return w;
}

json rat_json(const Rat& r) { return to_string(r); }

json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_json(r));
    return a;
}

json roots_json(const DrinfeldData& d) {
    json o = json::object();
    for (std::size_t k = 0; k < d.roots.size(); ++k) o[std::to_string(k + 1)] = rats_json(d.roots[k]);
    return o;
}

json witnesses_json(const CriterionReport& r) {
    json a = json::array();
    for (const auto& w : r.witnesses) a.push_back({{"r", w.r}, {"s", w.s}, {"k", w.k}, {"x", rat_json(w.x)}});
    return a;
}

bool all_rectangles(const std::vector<ModuleSpec>& specs) {
    return std::all_of(specs.begin(), specs.end(),
                       [](const ModuleSpec& s) { return as_rectangle(diagram_of(s)).has_value(); });
}

// (alpha, beta) if the pair is a reversed and a usual Young diagram.
std::optional<std::pair<Weight, Weight>> special_pair(const std::vector<ModuleSpec>& specs) {
    if (specs.size() != 2) return std::nullopt;
    auto a = as_reversed_young(diagram_of(specs[0]));
    auto b = as_usual_young(diagram_of(specs[1]));
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
}

std::string opt_str(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; }

json opt_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

Rat parse_h(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidInput, "h must be a rational \"p/q\", got " + j.dump());
        }
    }
    throw Error(ErrorKind::InvalidInput, "h must be an integer or a \"p/q\" string");
}

ModuleSpec parse_spec(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "spec must be an object");
    if (!j.contains("lambda") || !j.contains("N")) throw Error(ErrorKind::InvalidInput, "spec needs lambda and N");
    ModuleSpec s;
    s.lambda = parse_weight(j["lambda"], "lambda");
    if (j.contains("mu")) s.mu = parse_weight(j["mu"], "mu");
    if (!j["N"].is_number_integer()) throw Error(ErrorKind::InvalidInput, "N must be an integer");
    s.N = j["N"].get<int>();
    if (j.contains("h")) s.h = parse_h(j["h"]);
    diagram_of(s);
    return s;
}

std::vector<ModuleSpec> parse_specs(const json& j) {
    if (j.is_object() && j.contains("specs")) return parse_specs(j["specs"]);
    if (j.is_object()) return {parse_spec(j)};
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidInput, "expected a nonempty list of specs");
    std::vector<ModuleSpec> out;
    for (const auto& x : j) out.push_back(parse_spec(x));
    common_rank(out);
    return out;
}

json spec_json(const ModuleSpec& s) {
    return {{"lambda", s.lambda}, {"mu", s.mu}, {"N", s.N}, {"h", rat_json(s.h)}};
}

json diagram_report(const json& input) {
    const ModuleSpec s = parse_spec(input);
    const SkewDiagram d = diagram_of(s);
    json boxes = json::array(), columns = json::array();
    for (const auto& b : d.boxes) boxes.push_back({b.row, b.col});
    std::vector<int> bottoms;
    for (const auto& c : d.columns) {
        const int bottom = d.contents[c.cells.back()];
        bottoms.push_back(bottom);
        columns.push_back({{"col", c.col}, {"height", c.height()}, {"bottom_content", bottom}});
    }
    std::sort(bottoms.begin(), bottoms.end());
    return {{"lambda", d.lambda},
            {"mu", d.mu},
            {"N", d.N},
            {"M", d.M},
            {"h", rat_json(s.h)},
            {"boxes", boxes},
            {"contents", d.contents},
            {"columns", columns},
            {"bottom_contents", bottoms},
            {"inverse_column_g", inverse_column_tableau(d).g},
            {"ssyt_count", enumerate_ssyt(d, d.N).size()},
            {"gz_count", enumerate_gz_schemes(d).size()},
            {"drinfeld_roots", roots_json(drinfeld_roots(s))}};
}

json check_report(const json& input, const std::string& criterion) {
    if (criterion == "thm33") {
        const auto specs = parse_specs(input);
        const auto rep = thm33_irreducible(specs);
        return {{"criterion", "thm33"},
                {"verdict", rep.holds ? "irreducible" : "inconclusive"},
                {"witnesses", witnesses_json(rep)}};
    }
    if (criterion == "thm34") {
        const auto specs = parse_specs(input);
        const auto rep = thm34_irreducible(specs);
        json w = json::array();
        for (const auto& x : rep.witnesses)
            w.push_back({{"r", x.r},
                         {"s", x.s},
                         {"pair", x.pair},
                         {"lo", x.lo},
                         {"hi", x.hi},
                         {"difference", rat_json(x.difference)}});
        return {{"criterion", "thm34"}, {"verdict", rep.irreducible ? "irreducible" : "reducible"}, {"witnesses", w}};
    }
    if (criterion == "thm23") {
        if (input.is_object() && input.contains("alpha")) {
            const int N = input.at("N").get<int>();
            const Weight a = parse_weight(input["alpha"], "alpha"), b = parse_weight(input["beta"], "beta");
            reversed_young(a, N);
            usual_young(b, N);
            return {{"criterion", "thm23"},
                    {"alpha", a},
                    {"beta", b},
                    {"N", N},
                    {"noninvertible_h", thm23_noninvertible_set(a, b, N)},
                    {"verdict", "set"},
                    {"witnesses", json::array()}};
        }
        const auto specs = parse_specs(input);
        const auto pair = special_pair(specs);
        if (!pair)
            throw Error(ErrorKind::ShapeNotSpecial, "thm23 needs a reversed Young diagram followed by a usual one");
        const auto set = thm23_noninvertible_set(pair->first, pair->second, specs[0].N);
        const Rat h = specs[0].h - specs[1].h;
        const bool hit = is_integer(h) && std::binary_search(set.begin(), set.end(), static_cast<int>(h.get_num().get_si()));
        return {{"criterion", "thm23"},
                {"alpha", pair->first},
                {"beta", pair->second},
                {"N", specs[0].N},
                {"h", rat_json(h)},
                {"noninvertible_h", set},
                {"verdict", hit ? "noninvertible" : "invertible"},
                {"witnesses", json::array()}};
    }
    throw Error(ErrorKind::InvalidInput, "unknown criterion " + criterion);
}

json oracle_report(const json& input, std::size_t cap) {
    const auto specs = parse_specs(input);
    const GeneratorSet g = module_action(specs, cap);
    const OracleReport o = irreducible_oracle(g);
    const Vec zeta = singular_vector(specs);
    verify_singular(g, zeta);
    const bool cyc = cyclicity_oracle(g, zeta), cocyc = cocyclicity_oracle(g, zeta);
    const bool t33 = thm33_irreducible(specs).holds;
    const bool p31 = prop31_cyclic_condition(specs).holds, p32 = prop32_cocyclic_condition(specs).holds;
    json out = {{"dim", g.dim},
                {"closure_dim", o.closure_dim},
                {"irreducible", o.irreducible},
                {"cyclic", cyc},
                {"cocyclic", cocyc},
                {"thm33", t33},
                {"prop31", p31},
                {"prop32", p32}};
    bool agree = (!t33 || o.irreducible) && (!p31 || cyc) && (!p32 || cocyc);
    if (all_rectangles(specs)) {
        const bool t34 = thm34_irreducible(specs).irreducible;
        out["thm34"] = t34;
        agree = agree && t34 == o.irreducible;
    } else {
        out["thm34"] = nullptr;
    }
    out["agree"] = agree;
    return out;
}

json intertwiner_report(const json& input, bool with_matrix) {
    const auto specs = parse_specs(input);
    if (specs.size() != 2) throw Error(ErrorKind::InvalidInput, "intertwiner needs exactly two specs");
    const Intertwiner R = intertwiner(specs[0], specs[1]);
    json out = {{"h", rat_json(specs[0].h - specs[1].h)},
                {"order", R.order},
                {"dim", R.dim},
                {"rank", R.rank},
                {"invertible", R.invertible()},
                {"intertwines", check_intertwining(R, specs[0], specs[1])}};
    if (with_matrix) {
        json m = json::array();
        for (std::size_t r = 0; r < R.matrix.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < R.matrix.cols(); ++c) row.push_back(rat_json(R.matrix(r, c)));
            m.push_back(row);
        }
        out["matrix"] = m;
    }
    return out;
}

std::pair<int, int> parse_window(const std::string& w) {
    const auto pos = w.find("..");
    if (pos == std::string::npos) throw Error(ErrorKind::InvalidInput, "window must look like a..b");
    try {
        std::size_t used = 0;
        const int a = std::stoi(w.substr(0, pos), &used);
        if (used != pos) throw std::invalid_argument("a");
        const std::string rest = w.substr(pos + 2);
        const int b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("b");
        return {a, b};
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "window must look like a..b, got " + w);
    }
}

SweepJob parse_job(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "job must be an object");
    SweepJob job;
    if (j.contains("tuples")) {
        for (const auto& t : j["tuples"]) job.tuples.push_back(parse_specs(t));
    } else if (j.contains("specs")) {
        job.tuples.push_back(parse_specs(j["specs"]));
    } else {
        throw Error(ErrorKind::InvalidInput, "job needs specs or tuples");
    }
    if (j.contains("ids")) {
        for (const auto& x : j["ids"]) job.ids.push_back(x.get<std::string>());
        if (job.ids.size() != job.tuples.size()) throw Error(ErrorKind::InvalidInput, "one id per tuple");
    } else {
        for (std::size_t t = 0; t < job.tuples.size(); ++t) job.ids.push_back("t" + std::to_string(t + 1));
    }
    if (j.contains("vary")) job.vary = j["vary"].get<int>();
    for (const auto& t : job.tuples)
        if (job.vary >= static_cast<int>(t.size())) throw Error(ErrorKind::InvalidInput, "vary index out of range");
    if (j.contains("window")) std::tie(job.lo, job.hi) = parse_window(j["window"].get<std::string>());
    if (j.contains("checks")) {
        for (const auto& c : j["checks"]) job.checks.insert(c.get<std::string>());
    } else {
        job.checks = {"thm33", "thm34", "thm23", "oracle", "intertwiner_rank"};
    }
    for (const auto& c : job.checks)
        if (c != "thm33" && c != "thm34" && c != "thm23" && c != "oracle" && c != "intertwiner_rank")
            throw Error(ErrorKind::InvalidInput, "unknown check " + c);
    return job;
}

std::vector<SweepRow> run_sweep(const SweepJob& job, bool parallel) {
    const std::size_t cap = job.cap == 0 ? default_dim_cap() : job.cap;
    const int width = job.hi >= job.lo ? job.hi - job.lo + 1 : 0;
    const long total = static_cast<long>(job.tuples.size()) * width;
    std::vector<SweepRow> rows(total);
    std::vector<std::string> errors(total);
    std::vector<ErrorKind> kinds(total, ErrorKind::Internal);
    auto has = [&](const char* c) { return job.checks.count(c) > 0; };
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long idx = 0; idx < total; ++idx) {
        try {
            const std::size_t tup = idx / width;
            const int t = job.lo + static_cast<int>(idx % width);
            std::vector<ModuleSpec> specs = job.tuples[tup];
            const std::size_t v = job.vary < 0 ? specs.size() - 1 : job.vary;
            specs[v].h += t;
            SweepRow& row = rows[idx];
            row.spec_ids = job.ids[tup];
            row.h_difference = specs.size() >= 2 ? Rat(specs[0].h - specs[1].h) : Rat(0);
            if (has("thm33")) row.thm33 = thm33_irreducible(specs).holds;
            if (has("thm34") && all_rectangles(specs)) row.thm34 = thm34_irreducible(specs).irreducible;
            const auto pair = special_pair(specs);
            if (has("thm23") && pair) {
                const auto set = thm23_noninvertible_set(pair->first, pair->second, specs[0].N);
                row.thm23_set_hit = is_integer(row.h_difference) &&
                                    std::binary_search(set.begin(), set.end(),
                                                       static_cast<int>(row.h_difference.get_num().get_si()));
            }
            try {
                if (has("oracle")) {
                    ClosureOptions opt;
                    opt.parallel = !parallel;
                    row.oracle = irreducible_oracle(module_action(specs, cap), opt).irreducible;
                }
                if (has("intertwiner_rank") && specs.size() == 2) {
                    const Intertwiner R = intertwiner(specs[0], specs[1]);
                    if (R.dim > cap)
                        throw Error(ErrorKind::DimensionCapExceeded, "intertwiner dimension exceeds cap");
                    row.rank = R.rank;
                    row.full_rank = R.dim;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DimensionCapExceeded) throw;
                row.skipped = true;
            }
            bool agree = true;
            if (row.thm34 && row.oracle) agree = agree && *row.thm34 == *row.oracle;
            if (row.thm33 && *row.thm33 && row.oracle) agree = agree && *row.oracle;
            if (row.thm23_set_hit && row.rank) agree = agree && *row.thm23_set_hit == (*row.rank < *row.full_rank);
            row.agree = agree;
        } catch (const Error& e) {
            errors[idx] = e.what();
            kinds[idx] = e.kind();
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    }
    for (long idx = 0; idx < total; ++idx)
        if (!errors[idx].empty()) throw Error(kinds[idx], "sweep row " + std::to_string(idx) + ": " + errors[idx]);
    return rows;
}

std::string rows_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "spec_ids,h_difference,thm33,thm34,thm23_set_hit,oracle,rank,full_rank,agree\n";
    for (const auto& r : rows) {
        os << r.spec_ids << ',' << to_string(r.h_difference) << ',' << opt_str(r.thm33) << ',' << opt_str(r.thm34)
           << ',' << opt_str(r.thm23_set_hit) << ',' << (r.skipped && !r.oracle ? "skipped" : opt_str(r.oracle))
           << ',' << (r.rank ? std::to_string(*r.rank) : "n/a") << ','
           << (r.full_rank ? std::to_string(*r.full_rank) : "n/a") << ',' << (r.agree ? "true" : "false") << '\n';
    }
    return os.str();
}

json rows_json(const std::vector<SweepRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) {
        a.push_back({{"spec_ids", r.spec_ids},
                     {"h_difference", rat_json(r.h_difference)},
                     {"thm33", opt_json(r.thm33)},
                     {"thm34", opt_json(r.thm34)},
                     {"thm23_set_hit", opt_json(r.thm23_set_hit)},
                     {"oracle", opt_json(r.oracle)},
                     {"rank", r.rank ? json(*r.rank) : json(nullptr)},
                     {"full_rank", r.full_rank ? json(*r.full_rank) : json(nullptr)},
                     {"skipped", r.skipped},
                     {"agree", r.agree}});
    }
    return {{"rows", a}};
}

}  // namespace yangirr::cli
