#include "arcminor/io.hpp"

#include "arcminor/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace arcminor {

Json family_to_json(const ArcFamily& f)
{
    Json arcs = Json::array();
    for (ArcId id = 0; id < f.size(); ++id)
        arcs.push_back({{"id", f.name(id)}, {"l", f.arc(id).l}, {"r", f.arc(id).r}});
    return {{"circle", f.circle()}, {"arcs", std::move(arcs)}};
}

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why)
{
    throw Error(Errc::parse_error, "field " + field + ": " + why);
}

int integer_field(const Json& obj, const std::string& key, const std::string& where)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        bad_field(where + key, "missing");
    if (!it->is_number_integer())
        bad_field(where + key, "expected an integer");
    const auto value = it->get<long long>();
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
        bad_field(where + key, "out of range");
    return static_cast<int>(value);
}

} // namespace

ArcFamily family_from_json(const Json& doc)
{
    if (!doc.is_object())
        bad_field("<root>", "expected an object");
    const int circle = integer_field(doc, "circle", "");
    const auto arcs_it = doc.find("arcs");
    if (arcs_it == doc.end() || !arcs_it->is_array())
        bad_field("arcs", "expected an array");

    std::vector<Arc> arcs;
    std::vector<std::string> names;
    std::size_t index = 0;
    for (const Json& item : *arcs_it) {
        const std::string where = "arcs[" + std::to_string(index) + "].";
        if (!item.is_object())
            bad_field(where.substr(0, where.size() - 1), "expected an object");
        const auto id = item.find("id");
        if (id == item.end())
            names.push_back("A" + std::to_string(index));
        else if (id->is_string())
            names.push_back(id->get<std::string>());
        else
            bad_field(where + "id", "expected a string");
        arcs.push_back({integer_field(item, "l", where), integer_field(item, "r", where)});
        ++index;
    }
    return ArcFamily(circle, std::move(arcs), std::move(names));
}

ArcFamily parse_family(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + e.what());
    }
    return family_from_json(doc);
}

ArcFamily load_family(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::parse_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_family(buffer.str());
}

void save_family(const ArcFamily& f, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::parse_error, "cannot write " + path.string());
    out << family_to_json(f).dump(2) << '\n';
}

Json coloring_to_json(const ArcFamily& f, const Coloring& c, bool valid)
{
    Json colors = Json::object();
    for (ArcId id = 0; id < f.size(); ++id)
        colors[f.name(id)] = c.colors.at(static_cast<std::size_t>(id));
    return {{"colors", std::move(colors)}, {"num_colors", c.num_colors}, {"valid", valid}};
}

Json minor_to_json(const ArcFamily& f, const MinorCertificate& cert)
{
    Json sets = Json::array();
    for (const auto& set : cert.branch_sets) {
        Json names = Json::array();
        for (Vertex v : set)
            names.push_back(f.name(v));
        sets.push_back(std::move(names));
    }
    return {{"target", cert.target}, {"branch_sets", std::move(sets)}};
}

MinorCertificate minor_from_json(const ArcFamily& f, const Json& doc)
{
    if (!doc.is_object())
        bad_field("<root>", "expected an object");
    MinorCertificate cert;
    cert.target = integer_field(doc, "target", "");
    const auto sets = doc.find("branch_sets");
    if (sets == doc.end() || !sets->is_array())
        bad_field("branch_sets", "expected an array");
    std::size_t s = 0;
    for (const Json& set : *sets) {
        if (!set.is_array())
            bad_field("branch_sets[" + std::to_string(s) + "]", "expected an array");
        auto& ids = cert.branch_sets.emplace_back();
        for (const Json& name : set) {
            if (!name.is_string())
                bad_field("branch_sets[" + std::to_string(s) + "]", "expected arc ids");
            const auto id = f.find(name.get<std::string>());
            if (!id)
                throw Error(Errc::unknown_arc, "unknown arc id " + name.get<std::string>());
            ids.push_back(*id);
        }
        ++s;
    }
    return cert;
}

Json attempts_to_json(const std::vector<RouteAttempt>& attempts)
{
    Json out = Json::array();
    for (const RouteAttempt& a : attempts)
        out.push_back({{"route", a.route}, {"succeeded", a.succeeded}, {"reason", a.reason}});
    return out;
}

Json hadwiger_to_json(const ArcFamily& f, const HadwigerCertificate& cert)
{
    return {{"chi", cert.chi},
            {"route", to_string(cert.route)},
            {"variant", cert.variant},
            {"minor", minor_to_json(f, cert.minor)},
            {"audit_trail", attempts_to_json(cert.audit_trail)}};
}

namespace {

Json optional_int(const std::optional<int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json tallies_to_json(const std::vector<LemmaTally>& tallies)
{
    Json out = Json::array();
    for (const LemmaTally& t : tallies) {
        out.push_back({{"name", t.name},
                       {"kind", t.kind == CheckKind::theorem ? "theorem" : "hypothesis"},
                       {"checked", t.checked},
                       {"failed", t.failed},
                       {"counterexample", t.counterexample.empty() ? Json(nullptr) : Json(t.counterexample)}});
    }
    return out;
}

} // namespace

Json stats_to_json(const InstanceStats& s)
{
    return {{"n", s.n},
            {"r_sup", s.r_sup},
            {"r_inf", s.r_inf},
            {"cover", optional_int(s.cover)},
            {"chi", optional_int(s.chi)},
            {"min_degree", s.min_degree}};
}

Json audit_to_json(const AuditReport& report)
{
    Json instances = Json::array();
    for (const InstanceStats& s : report.instances)
        instances.push_back(stats_to_json(s));
    Json schemes = Json::array();
    for (const SchemeOutcome& o : report.schemes)
        schemes.push_back({{"scheme", o.scheme}, {"valid", o.valid}, {"detail", o.detail}});
    return {{"instances", std::move(instances)},
            {"lemmas", tallies_to_json(report.lemmas)},
            {"hypotheses", tallies_to_json(report.hypotheses)},
            {"schemes", std::move(schemes)},
            {"theorem_failures", report.theorem_failures()},
            {"alarms", report.alarms}};
}

} // namespace arcminor
