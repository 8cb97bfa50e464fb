#include "bierfan/json_io.hpp"

#include <algorithm>

namespace bierfan {

namespace {

json facet_array(const SimplicialComplex& K) {
    std::vector<FaceMask> facets = K.facet_masks();
    std::sort(facets.begin(), facets.end(), label_lex_less);
    json arr = json::array();
    for (FaceMask f : facets) arr.push_back(mask_labels(f));
    return arr;
}

json labels_json(FaceMask f) { return json(mask_labels(f)); }

}  // namespace

json complex_to_json(const SimplicialComplex& K) {
    return json{{"m", K.ground_size()}, {"facets", facet_array(K)}};
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON requires fields \"m\" and \"facets\"");
    if (!j["m"].is_number_integer())
        throw std::invalid_argument("field \"m\" must be an integer");
    const int m = j["m"].get<int>();
    std::vector<std::vector<int>> facets;
    if (!j["facets"].is_array())
        throw std::invalid_argument("field \"facets\" must be an array of label arrays");
    for (const auto& entry : j["facets"]) {
        if (!entry.is_array())
            throw std::invalid_argument("each facet must be an array of labels");
        facets.push_back(entry.get<std::vector<int>>());
    }
    return from_facets(m, facets);
}

json bier_to_json(const BierComplex& B) {
    json j = complex_to_json(B.complex);
    j["primed_offset"] = B.m;
    return j;
}

BierComplex bier_from_json(const json& j) {
    if (!j.contains("primed_offset"))
        throw std::invalid_argument("Bier complex JSON requires \"primed_offset\"");
    const int m = j["primed_offset"].get<int>();
    const SimplicialComplex C = complex_from_json(j);
    if (C.ground_size() != 2 * m)
        throw std::invalid_argument("Bier complex ground size must equal 2 * primed_offset");

    // K is recoverable as the unprimed restriction of the face family.
    const FaceMask low = (FaceMask(1) << m) - 1;
    std::vector<FaceMask> source_faces;
    for (FaceMask f : C.faces())
        if ((f & ~low) == 0) source_faces.push_back(f);
    BierComplex B = bier_sphere(SimplicialComplex::from_face_family(m, std::move(source_faces)));
    if (!(B.complex == C))
        throw std::invalid_argument("face family is not the Bier sphere of its unprimed part");
    return B;
}

json fan_to_json(const Fan& F) {
    std::vector<const Cone*> cones;
    for (const Cone& c : F.max_cones) cones.push_back(&c);
    std::sort(cones.begin(), cones.end(),
              [](const Cone* a, const Cone* b) { return tag_less(a->tag, b->tag); });

    json arr = json::array();
    for (const Cone* c : cones) {
        json gens = json::array();
        for (const LatticeVector& g : c->generators) gens.push_back(g.c);
        arr.push_back(json{{"I", labels_json(c->tag.I)},
                           {"J", labels_json(c->tag.J)},
                           {"generators", gens}});
    }
    return json{{"m", F.m}, {"max_cones", arr}};
}

json toric_report_to_json(const ToricReport& r) {
    return json{
        {"m", r.m},
        {"f", r.fh.f},
        {"h", r.fh.h},
        {"betti", r.betti},
        {"euler", r.euler},
        {"dims",
         {{"dim_Z", r.dims.dim_Z},
          {"dim_R", r.dims.dim_R},
          {"dim_M", r.dims.dim_M},
          {"dim_M_real", r.dims.dim_M_real},
          {"rank_H", r.dims.rank_H}}},
        {"ds_ok", r.ds_ok},
        {"orientability",
         {{"criterion", r.orientability.criterion},
          {"m_even", r.orientability.m_even},
          {"matches", r.orientability.matches}}},
    };
}

json completeness_to_json(const CompletenessReport& r, bool include_witness) {
    json j{{"regular", r.regular}, {"complete", r.complete()}};
    if (include_witness && !r.complete()) {
        j["checks"] = {{"pseudomanifold", r.pseudomanifold},
                       {"wall", r.wall},
                       {"sampling", r.sampling}};
        json witness = json::object();
        if (r.bad_ridge) witness["ridge"] = labels_json(*r.bad_ridge);
        if (r.bad_point) {
            json coords = json::array();
            for (const Rational& c : r.bad_point->coords) coords.push_back(c.str());
            witness["point"] = coords;
            json tags = json::array();
            for (const ConeTag& t : r.bad_point_tags)
                tags.push_back(json{{"I", labels_json(t.I)}, {"J", labels_json(t.J)}});
            witness["tags"] = tags;
        }
        witness["detail"] = r.detail;
        j["witness"] = witness;
    }
    return j;
}

json classification_to_json(const ClassificationReport& r) {
    json classes = json::array();
    for (const BierClass& cls : r.classes) {
        json entry{{"canonical_bier", complex_to_json(cls.canonical)},
                   {"multiplicity", cls.multiplicity},
                   {"representative", complex_to_json(cls.representative)},
                   {"f", cls.fh.f},
                   {"h", cls.fh.h}};
        if (r.fans_checked) {
            entry["fan_regular"] = cls.fan_regular;
            entry["fan_complete"] = cls.fan_complete;
        }
        classes.push_back(entry);
    }
    return json{{"m", r.m},
                {"total_complexes", r.total_complexes},
                {"fans_checked", r.fans_checked},
                {"classes", classes}};
}

std::string dump_canonical(const json& j) { return j.dump() + "\n"; }

RationalPoint parse_point(const std::string& text) {
    RationalPoint p;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        p.coords.push_back(Rational::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return p;
}

}  // namespace bierfan
