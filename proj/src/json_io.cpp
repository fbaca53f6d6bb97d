#include <elusive/json_io.hpp>

#include <stdexcept>

namespace elusive {

std::string family_token(Family f) {
    switch (f) {
        case Family::PSL: return "PSL";
        case Family::PSU: return "PSU";
        case Family::PSp: return "PSp";
        case Family::POmegaPlus: return "POmegaPlus";
        case Family::POmegaMinus: return "POmegaMinus";
        case Family::OmegaOdd: return "OmegaOdd";
    }
    throw std::logic_error("unhandled family");
}

std::optional<Family> family_parse(const std::string& s) {
    if (s == "PSL") return Family::PSL;
    if (s == "PSU") return Family::PSU;
    if (s == "PSp") return Family::PSp;
    if (s == "POmegaPlus" || s == "POmega+") return Family::POmegaPlus;
    if (s == "POmegaMinus" || s == "POmega-") return Family::POmegaMinus;
    if (s == "OmegaOdd") return Family::OmegaOdd;
    return std::nullopt;
}

json spec_to_json(const GroupSpec& s) {
    json j;
    j["family"] = family_token(s.family);
    j["n"] = s.n;
    j["p"] = s.p;
    j["f"] = s.f;
    j["q"] = s.q();
    return j;
}

GroupSpec spec_from_json(const json& j) {
    auto fam = family_parse(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family");
    GroupSpec s;
    s.family = *fam;
    s.n = j.at("n").get<std::uint32_t>();
    s.p = j.at("p").get<std::uint64_t>();
    s.f = j.value("f", 1u);
    return s;
}

namespace {

const char* kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::Semisimple: return "semisimple";
        case LabelKind::SemisimpleSplit: return "split";
        case LabelKind::Unipotent: return "unipotent";
        case LabelKind::Involution: return "involution";
    }
    throw std::logic_error("unhandled label kind");
}

const char* decor_name(Decor2 d) {
    switch (d) {
        case Decor2::A: return "a";
        case Decor2::B: return "b";
        case Decor2::C: return "c";
        default: return "";
    }
}

}  // namespace

json label_to_json(const ClassLabel& lab) {
    json j;
    j["kind"] = kind_name(lab.kind);
    switch (lab.kind) {
        case LabelKind::Semisimple:
            j["block_mult"] = lab.block_mult;
            j["fixed_dim"] = lab.fixed_dim;
            if (lab.splits) j["splits"] = true;
            break;
        case LabelKind::SemisimpleSplit:
            j["eig_mult"] = lab.eig_mult;
            break;
        case LabelKind::Unipotent:
            j["jordan"] = lab.jordan.parts;
            if (lab.class_multiplier != 1) j["multiplier"] = lab.class_multiplier;
            if (lab.decor != Decor2::None) {
                j["decor"] = decor_name(lab.decor);
                j["ell"] = lab.ell;
            }
            break;
        case LabelKind::Involution:
            j["minus_dim"] = lab.minus_dim;
            if (lab.tau != 0) j["tau"] = lab.tau;
            if (lab.tau_perp != 0) j["tau_perp"] = lab.tau_perp;
            if (lab.half_spin) j["half_spin"] = true;
            break;
    }
    j["label"] = lab.to_string();
    return j;
}

ClassLabel label_from_json(const json& j) {
    ClassLabel lab;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "semisimple") {
        lab.kind = LabelKind::Semisimple;
        lab.block_mult = j.at("block_mult").get<std::vector<std::uint32_t>>();
        lab.fixed_dim = j.at("fixed_dim").get<std::uint32_t>();
        lab.splits = j.value("splits", false);
    } else if (kind == "split") {
        lab.kind = LabelKind::SemisimpleSplit;
        lab.eig_mult = j.at("eig_mult").get<std::vector<std::uint32_t>>();
    } else if (kind == "unipotent") {
        lab.kind = LabelKind::Unipotent;
        lab.jordan.parts = j.at("jordan").get<std::vector<unsigned>>();
        lab.class_multiplier = j.value("multiplier", std::uint64_t{1});
        std::string dec = j.value("decor", std::string());
        if (dec == "a") lab.decor = Decor2::A;
        else if (dec == "b") lab.decor = Decor2::B;
        else if (dec == "c") lab.decor = Decor2::C;
        lab.ell = j.value("ell", 0u);
    } else if (kind == "involution") {
        lab.kind = LabelKind::Involution;
        lab.minus_dim = j.at("minus_dim").get<std::uint32_t>();
        lab.tau = j.value("tau", 0);
        lab.tau_perp = j.value("tau_perp", 0);
        lab.half_spin = j.value("half_spin", false);
    } else {
        throw std::invalid_argument("unknown label kind: " + kind);
    }
    return lab;
}

json verdict_to_json(const Verdict& v) {
    json j;
    if (!v.decided) {
        j["rejected"] = true;
        if (!v.note.empty()) j["note"] = v.note;
        return j;
    }
    j["elusive"] = v.elusive;
    j["rule"] = v.rule;
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    if (j.value("rejected", false)) {
        v.note = j.value("note", std::string());
        return v;
    }
    v.decided = true;
    v.degree_divisible = true;
    v.elusive = j.at("elusive").get<bool>();
    v.rule = j.at("rule").get<std::string>();
    v.witness = j.value("witness", std::string());
    v.note = j.value("note", std::string());
    return v;
}

json enum_to_json(const EnumReport& rep) {
    json j;
    j["count"] = rep.class_count;
    j["exact"] = rep.exact;
    json labs = json::array();
    for (const ClassLabel& lab : rep.labels) labs.push_back(label_to_json(lab));
    j["labels"] = labs;
    return j;
}

json subgroup_to_json(const SubgroupReport& rep) {
    json j;
    j["count"] = rep.count;
    j["exact"] = rep.exact;
    json labs = json::array();
    for (const ClassLabel& lab : rep.labels) labs.push_back(label_to_json(lab));
    j["labels"] = labs;
    j["orbits"] = rep.orbits;
    return j;
}

json coverage_to_json(const CoverageReport& rep) {
    json j;
    j["group"] = spec_to_json(rep.spec);
    j["d"] = rep.d;
    j["r"] = rep.r;
    j["exact"] = rep.exact;
    j["elusive"] = rep.elusive;
    json entries = json::array();
    for (const CoverageEntry& e : rep.entries) {
        json row;
        row["label"] = e.label.to_string();
        row["covered_by"] = e.covered_by;
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

}  // namespace elusive
