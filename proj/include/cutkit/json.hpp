#pragma once

// JSON encodings of every value type, the job-file format read by the CLI,
// and the reports it writes. Every emitter has a matching reader and
// read(emit(x)) == x.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cutkit/cuts.hpp"
#include "cutkit/errors.hpp"
#include "cutkit/hahn.hpp"
#include "cutkit/index_order.hpp"
#include "cutkit/oracle.hpp"
#include "cutkit/quasicuts.hpp"
#include "cutkit/rational.hpp"
#include "cutkit/small_ext.hpp"

namespace cutkit {

using Json = nlohmann::ordered_json;

/// A malformed string literal inside otherwise valid JSON. `column` counts
/// from the opening quote's successor.
class token_error : public parse_error {
public:
    token_error(const std::string& what, std::string token, std::size_t column)
        : parse_error(what), token_(std::move(token)), column_in_token_(column) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t column_in_token() const noexcept { return column_in_token_; }

private:
    std::string token_;
    std::size_t column_in_token_;
};

namespace detail {

// Location inside a JSON document for error messages, e.g. items[2].ball.side.
class JsonPath {
public:
    JsonPath() = default;
    explicit JsonPath(std::string p) : path_(std::move(p)) {}

    JsonPath operator/(const std::string& key) const { return JsonPath(path_.empty() ? key : path_ + "." + key); }
    JsonPath operator/(std::size_t k) const { return JsonPath(path_ + "[" + std::to_string(k) + "]"); }
    const std::string& str() const { return path_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error((path_.empty() ? std::string("document") : path_) + ": " + msg);
    }

private:
    std::string path_;
};

inline const Json& member(const Json& j, const char* key, const JsonPath& at) {
    if (!j.is_object()) at.fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) at.fail(std::string("missing field \"") + key + "\"");
    return *it;
}

inline void allow_only(const Json& j, std::initializer_list<const char*> keys, const JsonPath& at) {
    if (!j.is_object()) at.fail("expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) at.fail("unknown field \"" + it.key() + "\"");
    }
}

// The single key of a one-field tagged object.
inline std::string tag_of(const Json& j, const JsonPath& at) {
    if (!j.is_object() || j.size() != 1) at.fail("expected an object with exactly one field");
    return j.begin().key();
}

inline std::uint64_t read_positive(const Json& j, const JsonPath& at) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) at.fail("expected a positive integer");
    return j.get<std::uint64_t>();
}

inline const std::string& read_string(const Json& j, const JsonPath& at) {
    if (!j.is_string()) at.fail("expected a string");
    return j.get_ref<const std::string&>();
}

template <class Parse>
auto read_literal(const Json& j, const JsonPath& at, Parse parse) {
    const std::string& s = read_string(j, at);
    try {
        return parse(s);
    } catch (const parse_error& e) {
        throw token_error(at.str() + ": " + e.message(), s, e.column());
    }
}

// Runs `f`, turning validation failures into messages that name the location.
template <class F>
auto located(const JsonPath& at, F f) {
    try {
        return f();
    } catch (const token_error&) {
        throw;
    } catch (const validation_error& e) {
        throw validation_error(at.str() + ": " + e.what());
    } catch (const precondition_error& e) {
        throw validation_error(at.str() + ": " + e.what());
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Index sets, indices, segments

inline Json to_json(const IndexSet& space) {
    Json out = Json::array();
    for (const Atom& a : space.atoms()) {
        switch (a.kind) {
        case AtomKind::Fin: out.push_back(Json{{"fin", a.length}}); break;
        case AtomKind::Omega: out.push_back("omega"); break;
        case AtomKind::OmegaOpp: out.push_back("omega_opp"); break;
        }
    }
    return out;
}

inline IndexSet index_set_from_json(const Json& j, const detail::JsonPath& at = {}) {
    if (!j.is_array()) at.fail("an index set is an array of atoms");
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& a = j[k];
        if (a == "omega") atoms.push_back(Atom::omega());
        else if (a == "omega_opp") atoms.push_back(Atom::omega_opp());
        else if (a.is_object() && a.size() == 1 && a.contains("fin"))
            atoms.push_back(Atom::fin(detail::read_positive(a["fin"], at / k / "fin")));
        else (at / k).fail("expected {\"fin\": n}, \"omega\" or \"omega_opp\"");
    }
    return IndexSet(std::move(atoms));
}

inline Json to_json(const Index& i) { return Json::array({i.atom, i.inner}); }

inline Index index_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    if (!j.is_array() || j.size() != 2) at.fail("an index is [atom, inner]");
    Index i{detail::read_positive(j[0], at / 0), detail::read_positive(j[1], at / 1)};
    detail::located(at, [&] { space.validate(i); return 0; });
    return i;
}

inline Json to_json(const InitialSegment& s, const IndexSet& space) {
    if (s.is_full(space)) return "full";
    if (s.is_empty()) return "empty";
    if (s.within() == Within::Empty) return Json{{"atom", s.cut_atom() - 1}, {"all", true}};
    return Json{{"atom", s.cut_atom()}, {"upto", s.bound()}};
}

inline InitialSegment segment_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    if (j == "full") return InitialSegment::full(space);
    if (j == "empty") return InitialSegment::empty_segment();
    if (!j.is_object()) at.fail("expected \"empty\", \"full\", {\"atom\", \"upto\"} or {\"atom\", \"all\"}");
    detail::allow_only(j, {"atom", "upto", "all"}, at);
    std::size_t atom = detail::read_positive(detail::member(j, "atom", at), at / "atom");
    if (j.contains("upto") == j.contains("all")) at.fail("a segment has exactly one of \"upto\" and \"all\"");
    if (j.contains("all")) {
        if (j["all"] != true) (at / "all").fail("expected true");
        return detail::located(at, [&] { return InitialSegment::make(space, atom, Within::All); });
    }
    std::uint64_t k = detail::read_positive(j["upto"], at / "upto");
    return detail::located(at, [&] { return InitialSegment::make(space, atom, Within::UpTo, k); });
}

// ---------------------------------------------------------------------------
// Vectors

inline Json to_json(const RealVector& x) {
    Json finite = Json::array();
    for (const Term& t : x.finite()) finite.push_back(Json::array({to_json(t.first), t.second.str()}));
    Json tail = nullptr;
    if (x.tail()) tail = Json{{"value", to_string(x.tail()->value)}, {"from", to_json(x.tail()->from)}};
    Json added = nullptr;
    if (x.added()) added = Json{{"segment", to_json(x.added()->segment, x.space())}, {"coord", x.added()->value.str()}};
    return Json{{"finite", finite}, {"tail", tail}, {"added", added}};
}

inline RealVector vector_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    detail::allow_only(j, {"finite", "tail", "added"}, at);
    std::vector<Term> finite;
    if (j.contains("finite")) {
        const Json& f = j["finite"];
        if (!f.is_array()) (at / "finite").fail("expected an array of [index, \"coord\"] pairs");
        for (std::size_t k = 0; k < f.size(); ++k) {
            detail::JsonPath p = at / "finite" / k;
            if (!f[k].is_array() || f[k].size() != 2) p.fail("expected [index, \"coord\"]");
            Index i = index_from_json(f[k][0], space, p / 0);
            finite.emplace_back(i, detail::read_literal(f[k][1], p / 1, parse_coordinate));
        }
    }
    std::optional<ConstantTail> tail;
    if (j.contains("tail") && !j["tail"].is_null()) {
        const Json& t = j["tail"];
        detail::JsonPath p = at / "tail";
        detail::allow_only(t, {"value", "from"}, p);
        Rational v = detail::read_literal(detail::member(t, "value", p), p / "value", parse_rational);
        tail = ConstantTail{v, index_from_json(detail::member(t, "from", p), space, p / "from")};
    }
    std::optional<AddedCoordinate> added;
    if (j.contains("added") && !j["added"].is_null()) {
        const Json& a = j["added"];
        detail::JsonPath p = at / "added";
        detail::allow_only(a, {"segment", "coord"}, p);
        InitialSegment s = segment_from_json(detail::member(a, "segment", p), space, p / "segment");
        added = AddedCoordinate{s, detail::read_literal(detail::member(a, "coord", p), p / "coord", parse_coordinate)};
    }
    return detail::located(at, [&] { return RealVector::make(space, std::move(finite), tail, added); });
}

// ---------------------------------------------------------------------------
// Cuts, quasi-cut points, Γ(D) elements

inline Json to_json(const CutDescriptor& d) {
    if (d.is_ball()) {
        const BallCut& b = d.as_ball();
        return Json{{"ball",
                     {{"center", to_json(b.center)}, {"segment", to_json(b.segment, d.space())}, {"side", to_string(b.side)}}}};
    }
    return Json{{"nonball", {{"vector", to_json(d.as_nonball().realization)}}}};
}

inline CutDescriptor cut_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    std::string tag = detail::tag_of(j, at);
    const Json& body = j[tag];
    detail::JsonPath p = at / tag;
    if (tag == "ball") {
        detail::allow_only(body, {"center", "segment", "side"}, p);
        RealVector c = vector_from_json(detail::member(body, "center", p), space, p / "center");
        InitialSegment s = segment_from_json(detail::member(body, "segment", p), space, p / "segment");
        const Json& side = detail::member(body, "side", p);
        if (side != "+" && side != "-") (p / "side").fail("expected \"+\" or \"-\"");
        return detail::located(p, [&] { return CutDescriptor::ball(c, s, side == "+" ? Side::Plus : Side::Minus); });
    }
    if (tag == "nonball") {
        detail::allow_only(body, {"vector"}, p);
        RealVector x = vector_from_json(detail::member(body, "vector", p), space, p / "vector");
        return detail::located(p, [&] { return CutDescriptor::from_vector(x); });
    }
    at.fail("expected {\"ball\": ...} or {\"nonball\": ...}");
}

inline Json to_json(const QuasiCutPoint& q) {
    if (q.is_interior()) return Json{{"interior", to_json(q.as_interior())}};
    return Json{{"cut", to_json(q.as_cut())}};
}

/// Accepts {"interior": v} | {"cut": c}, and a bare cut as shorthand for {"cut": c}.
inline QuasiCutPoint point_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    std::string tag = detail::tag_of(j, at);
    if (tag == "interior") {
        RealVector v = vector_from_json(j[tag], space, at / tag);
        return detail::located(at, [&] { return QuasiCutPoint::interior(v); });
    }
    if (tag == "cut") return QuasiCutPoint::cut(cut_from_json(j[tag], space, at / tag));
    return QuasiCutPoint::cut(cut_from_json(j, space, at));
}

inline Json to_json(const GammaDElement& u) {
    return Json{{"cut", to_json(u.cut)}, {"m", u.m.str()}, {"b", to_json(u.b)}};
}

inline GammaDElement gamma_d_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    detail::allow_only(j, {"cut", "m", "b"}, at);
    CutDescriptor d = cut_from_json(detail::member(j, "cut", at), space, at / "cut");
    const Json& mj = detail::member(j, "m", at);
    Integer m;
    if (mj.is_number_integer()) m = mj.get<std::int64_t>();
    else {
        Rational q = detail::read_literal(mj, at / "m", parse_rational);
        if (denominator(q) != 1) (at / "m").fail("expected an integer");
        m = numerator(q);
    }
    RealVector b = vector_from_json(detail::member(j, "b", at), space, at / "b");
    return detail::located(at, [&] { return GammaDElement(d, m, b); });
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(CardinalValue v) {
    switch (v) {
    case CardinalValue::Zero: return 0;
    case CardinalValue::One: return 1;
    case CardinalValue::Aleph0: return "aleph0";
    }
    return nullptr;
}

inline CardinalValue cardinal_value_from_json(const Json& j, const detail::JsonPath& at = {}) {
    if (j == 0) return CardinalValue::Zero;
    if (j == 1) return CardinalValue::One;
    if (j == "aleph0") return CardinalValue::Aleph0;
    at.fail("expected 0, 1 or \"aleph0\"");
}

inline Json to_json(const CardinalReport& c) { return Json{{"symbolic", to_string(c.symbolic)}, {"value", to_json(c.value)}}; }

inline CardinalReport cardinal_from_json(const Json& j, const detail::JsonPath& at = {}) {
    detail::allow_only(j, {"symbolic", "value"}, at);
    const std::string& s = detail::read_string(detail::member(j, "symbolic", at), at / "symbolic");
    CardinalReport out{};
    bool known = false;
    for (SymbolicCardinal c : {SymbolicCardinal::Aleph0, SymbolicCardinal::KappaS, SymbolicCardinal::LambdaS, SymbolicCardinal::CofinS})
        if (s == to_string(c)) out.symbolic = c, known = true;
    if (!known) (at / "symbolic").fail("unknown symbolic cardinal \"" + s + "\"");
    out.value = cardinal_value_from_json(detail::member(j, "value", at), at / "value");
    return out;
}

inline CutType cut_type_from_string(const std::string& s, const detail::JsonPath& at = {}) {
    for (CutType t : kAllCutTypes)
        if (s == to_string(t)) return t;
    at.fail("unknown cut type \"" + s + "\"");
}

inline Json to_json(const ClassificationReport& r, const IndexSet& space) {
    return Json{{"type6", to_string(r.type6)},
                {"subtype", r.subtype ? Json(r.subtype->str()) : Json(nullptr)},
                {"invariance", to_json(r.invariance, space)},
                {"h_prime", to_json(r.h_prime, space)},
                {"vf", to_json(r.vf, space)},
                {"vf_stable", r.vf_stable},
                {"vi", to_json(r.vi, space)},
                {"vi_stable", r.vi_stable},
                {"kappa", to_json(r.kappa)},
                {"lambda", to_json(r.lambda)},
                {"rank_increases", r.rank_increases}};
}

inline ClassificationReport report_from_json(const Json& j, const IndexSet& space, const detail::JsonPath& at = {}) {
    using detail::member;
    detail::allow_only(j, {"type6", "subtype", "invariance", "h_prime", "vf", "vf_stable", "vi", "vi_stable", "kappa",
                           "lambda", "rank_increases"},
                       at);
    auto flag = [&](const char* key) {
        const Json& b = member(j, key, at);
        if (!b.is_boolean()) (at / key).fail("expected true or false");
        return b.get<bool>();
    };
    ClassificationReport r{};
    r.type6 = cut_type_from_string(detail::read_string(member(j, "type6", at), at / "type6"), at / "type6");
    const Json& st = member(j, "subtype", at);
    if (!st.is_null()) {
        const std::string& s = detail::read_string(st, at / "subtype");
        auto sg = [&](char c) {
            if (c != '+' && c != '-') (at / "subtype").fail("expected a triple like \"(+,-,+)\"");
            return c == '+';
        };
        if (s.size() != 7 || s[0] != '(' || s[2] != ',' || s[4] != ',' || s[6] != ')')
            (at / "subtype").fail("expected a triple like \"(+,-,+)\"");
        r.subtype = Subtype{sg(s[1]), sg(s[3]), sg(s[5])};
    }
    r.invariance = segment_from_json(member(j, "invariance", at), space, at / "invariance");
    r.h_prime = segment_from_json(member(j, "h_prime", at), space, at / "h_prime");
    r.vf = segment_from_json(member(j, "vf", at), space, at / "vf");
    r.vf_stable = flag("vf_stable");
    r.vi = segment_from_json(member(j, "vi", at), space, at / "vi");
    r.vi_stable = flag("vi_stable");
    r.kappa = cardinal_from_json(member(j, "kappa", at), at / "kappa");
    r.lambda = cardinal_from_json(member(j, "lambda", at), at / "lambda");
    r.rank_increases = flag("rank_increases");
    return r;
}

inline Json to_json(const OracleReport& r) {
    Json v = Json::array();
    for (const Violation& x : r.violations) v.push_back(Json{{"check", x.check}, {"detail", x.detail}});
    return Json{{"violations", v}, {"checked", r.checked}, {"seed", r.seed}};
}

inline OracleReport oracle_report_from_json(const Json& j, const detail::JsonPath& at = {}) {
    detail::allow_only(j, {"violations", "checked", "seed"}, at);
    OracleReport r;
    const Json& v = detail::member(j, "violations", at);
    if (!v.is_array()) (at / "violations").fail("expected an array");
    for (std::size_t k = 0; k < v.size(); ++k) {
        detail::JsonPath p = at / "violations" / k;
        detail::allow_only(v[k], {"check", "detail"}, p);
        r.violations.push_back({detail::read_string(detail::member(v[k], "check", p), p / "check"),
                                detail::read_string(detail::member(v[k], "detail", p), p / "detail")});
    }
    const Json& c = detail::member(j, "checked", at);
    const Json& s = detail::member(j, "seed", at);
    if (!c.is_number_unsigned()) (at / "checked").fail("expected a non-negative integer");
    if (!s.is_number_unsigned()) (at / "seed").fail("expected a non-negative integer");
    r.checked = c.get<std::size_t>();
    r.seed = s.get<std::uint64_t>();
    return r;
}

inline Json to_json(const CovarianceTable& table) {
    auto cell = [](const CovarianceCell& c) {
        return Json{{"group", c.group == CovarianceGroup::H ? "H" : "H'"}, {"stable", c.stable}};
    };
    Json out = Json::array();
    for (CutType t : kAllCutTypes) {
        const CovarianceRow& row = table[static_cast<std::size_t>(t)];
        out.push_back(Json{{"type", to_string(t)}, {"vf", cell(row.vf)}, {"vi", cell(row.vi)}});
    }
    return out;
}

/// Six rows, one per type; each row names its type so a reordering is visible.
inline CovarianceTable covariance_table_from_json(const Json& j, const detail::JsonPath& at = {}) {
    if (!j.is_array() || j.size() != kAllCutTypes.size()) at.fail("expected six covariance rows");
    auto cell = [](const Json& c, const detail::JsonPath& p) {
        detail::allow_only(c, {"group", "stable"}, p);
        const Json& g = detail::member(c, "group", p);
        const Json& s = detail::member(c, "stable", p);
        if (g != "H" && g != "H'") (p / "group").fail("expected \"H\" or \"H'\"");
        if (!s.is_boolean()) (p / "stable").fail("expected true or false");
        return CovarianceCell{g == "H" ? CovarianceGroup::H : CovarianceGroup::HPrime, s.get<bool>()};
    };
    CovarianceTable table{};
    std::set<CutType> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
        detail::JsonPath p = at / k;
        detail::allow_only(j[k], {"type", "vf", "vi"}, p);
        CutType t = cut_type_from_string(detail::read_string(detail::member(j[k], "type", p), p / "type"), p / "type");
        if (!seen.insert(t).second) (p / "type").fail("duplicate row");
        table[static_cast<std::size_t>(t)] = {cell(detail::member(j[k], "vf", p), p / "vf"),
                                              cell(detail::member(j[k], "vi", p), p / "vi")};
    }
    return table;
}

// ---------------------------------------------------------------------------
// Job files

struct JobParams {
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> count;
    std::optional<std::int64_t> max_denominator;
    std::optional<std::int64_t> max_support;
    std::optional<std::int64_t> max_label;

    friend bool operator==(const JobParams&, const JobParams&) = default;
};

struct JobFile {
    std::string name;
    IndexSet group;
    std::vector<QuasiCutPoint> items;
    JobParams params;
    std::optional<CovarianceTable> covariance_table;

    friend bool operator==(const JobFile&, const JobFile&) = default;
};

inline Json to_json(const JobFile& job) {
    Json items = Json::array();
    for (const QuasiCutPoint& p : job.items) items.push_back(to_json(p));
    Json out{{"name", job.name}, {"group", to_json(job.group)}, {"items", items}};
    Json params = Json::object();
    if (job.params.seed) params["seed"] = *job.params.seed;
    if (job.params.count) params["count"] = *job.params.count;
    if (job.params.max_denominator) params["max_denominator"] = *job.params.max_denominator;
    if (job.params.max_support) params["max_support"] = *job.params.max_support;
    if (job.params.max_label) params["max_label"] = *job.params.max_label;
    if (!params.empty()) out["params"] = params;
    if (job.covariance_table) out["covariance_table"] = to_json(*job.covariance_table);
    return out;
}

inline JobFile job_from_json(const Json& j) {
    detail::JsonPath root;
    detail::allow_only(j, {"name", "group", "items", "params", "covariance_table"}, root);
    JobFile job;
    if (j.contains("name")) job.name = detail::read_string(j["name"], root / "name");
    job.group = index_set_from_json(detail::member(j, "group", root), root / "group");
    const Json& items = detail::member(j, "items", root);
    if (!items.is_array()) (root / "items").fail("expected an array");
    for (std::size_t k = 0; k < items.size(); ++k) job.items.push_back(point_from_json(items[k], job.group, root / "items" / k));
    if (j.contains("params")) {
        const Json& p = j["params"];
        detail::JsonPath at = root / "params";
        detail::allow_only(p, {"seed", "count", "max_denominator", "max_support", "max_label"}, at);
        if (p.contains("seed")) {
            if (!p["seed"].is_number_unsigned()) (at / "seed").fail("expected a non-negative integer");
            job.params.seed = p["seed"].get<std::uint64_t>();
        }
        auto bound = [&](const char* key, std::optional<std::int64_t>& slot) {
            if (p.contains(key)) slot = static_cast<std::int64_t>(detail::read_positive(p[key], at / key));
        };
        bound("count", job.params.count);
        bound("max_denominator", job.params.max_denominator);
        bound("max_support", job.params.max_support);
        bound("max_label", job.params.max_label);
    }
    if (j.contains("covariance_table"))
        job.covariance_table = covariance_table_from_json(j["covariance_table"], root / "covariance_table");
    return job;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') ++line, col = 1;
        else ++col;
    }
    return {line, col};
}

} // namespace detail

/// Parses a job file. Syntax errors and malformed literals are reported with
/// the 1-based line and column of the offending character.
inline JobFile parse_job(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
        auto [line, col] = detail::line_column(text, offset);
        std::string msg = e.what();
        if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
        throw parse_error("invalid JSON: " + msg, line, col);
    }
    try {
        return job_from_json(j);
    } catch (const token_error& e) {
        std::size_t at = text.find("\"" + e.token() + "\"");
        if (at == std::string::npos) throw parse_error(e.what());
        auto [line, col] = detail::line_column(text, at + e.column_in_token());
        throw parse_error(e.message(), line, col);
    }
}

} // namespace cutkit
