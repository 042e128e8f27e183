#include "delsarte/serialize.hpp"

#include <stdexcept>

namespace delsarte {

using nlohmann::json;

namespace {

json weights_json(const WeightSystem& q)
{
    json arr = json::array();
    for (std::uint64_t w : q.weights) arr.push_back(w);
    return arr;
}

std::array<std::uint64_t, 5> array5_from_json(const json& arr, const char* what)
{
    if (!arr.is_array() || arr.size() != 5)
        throw std::invalid_argument(std::string(what) + " must be an array of 5 integers");
    std::array<std::uint64_t, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = arr[i].get<std::uint64_t>();
    return out;
}

}  // namespace

json threefold_to_json(const DelsarteThreefold& x)
{
    json doc;
    doc["weights"] = weights_json(x.weights);
    doc["degree"] = x.weights.degree;
    json rows = json::array();
    for (std::size_t i = 0; i < 5; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < 5; ++j) {
            const Int& e = x.matrix.at(i, j);
            if (!e.fits_slong_p())
                throw std::domain_error("matrix entry does not fit the document integer range");
            row.push_back(static_cast<std::int64_t>(e.get_si()));
        }
        rows.push_back(row);
    }
    doc["matrix"] = rows;
    doc["family"] = family_name(x.family);
    if (x.reference_hodge)
        doc["reference_hodge"] = json::array({x.reference_hodge->h11, x.reference_hodge->h12});
    return doc;
}

DelsarteThreefold threefold_from_json(const json& doc)
{
    WeightSystem q;
    q.weights = array5_from_json(doc.at("weights"), "weights");
    q.degree = doc.at("degree").get<std::uint64_t>();

    const json& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != 5)
        throw std::invalid_argument("matrix must be an array of 5 rows");
    IntMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != 5)
            throw std::invalid_argument("matrix rows must have 5 entries");
        for (std::size_t j = 0; j < 5; ++j)
            m.at(i, j) = static_cast<long>(row[j].get<std::int64_t>());
    }
    Family fam = doc.contains("family") ? family_from_name(doc.at("family").get<std::string>())
                                        : Family::General;
    DelsarteThreefold x = DelsarteThreefold::general(q, std::move(m), fam);
    if (doc.contains("reference_hodge") && !doc.at("reference_hodge").is_null()) {
        const json& rh = doc.at("reference_hodge");
        x.reference_hodge = HodgePair{rh.at(0).get<std::uint64_t>(), rh.at(1).get<std::uint64_t>()};
    }
    return x;
}

json charset_to_json(const CharSetSummary& s)
{
    json doc;
    doc["modulus"] = s.modulus;
    doc["count"] = s.count;
    doc["graded_counts"] = json::array(
        {s.graded_counts[0], s.graded_counts[1], s.graded_counts[2], s.graded_counts[3]});
    return doc;
}

json height_result_to_json(const HeightResult& h)
{
    json doc;
    if (h.finite) {
        doc["outcome"] = "finite";
        doc["h"] = h.h;
        doc["witness"] = json{{"norms", h.witness_norms}};
    } else {
        doc["outcome"] = "infinite";
        doc["witness"] = json{{"index", h.fail_index}, {"norm", h.fail_norm}};
    }
    return doc;
}

json spectrum_to_json(const ResidueSpectrum& sp)
{
    json doc;
    doc["d_A"] = sp.d_A;
    doc["phi"] = sp.phi;
    json groups = json::array();
    for (const SpectrumGroup& g : sp.groups) {
        json jg;
        if (g.finite)
            jg["height"] = g.height;
        else
            jg["height"] = "inf";
        jg["count"] = g.class_count;
        jg["representatives"] = g.representatives;
        groups.push_back(jg);
    }
    doc["groups"] = groups;
    return doc;
}

ResidueSpectrum spectrum_from_json(const json& doc)
{
    ResidueSpectrum sp;
    sp.d_A = doc.at("d_A").get<std::uint64_t>();
    sp.phi = doc.at("phi").get<std::uint64_t>();
    for (const json& jg : doc.at("groups")) {
        SpectrumGroup g;
        g.finite = !jg.at("height").is_string();
        if (g.finite) g.height = jg.at("height").get<std::uint64_t>();
        g.class_count = jg.at("count").get<std::uint64_t>();
        g.representatives = jg.at("representatives").get<std::vector<std::uint64_t>>();
        sp.groups.push_back(std::move(g));
    }
    return sp;
}

json reduced_to_json(const ReducedCharacter& rc)
{
    json doc;
    doc["e"] = rc.e;
    doc["d_A"] = rc.d_A;
    doc["alpha_A"] = json::array({rc.alpha_A[0], rc.alpha_A[1], rc.alpha_A[2], rc.alpha_A[3],
                                  rc.alpha_A[4]});
    return doc;
}

json record_to_json(const WeightRecord& rec)
{
    json doc;
    doc["weights"] = weights_json(rec.weight_system);
    doc["degree"] = rec.weight_system.degree;
    doc["family"] = family_name(rec.family);
    if (rec.exponents) {
        json arr = json::array();
        for (std::uint64_t e : *rec.exponents) arr.push_back(e);
        doc["exponents"] = arr;
    }
    doc["e"] = rec.e;
    doc["d_A"] = rec.d_A;
    doc["alpha_A"] = json::array({rec.alpha_A[0], rec.alpha_A[1], rec.alpha_A[2], rec.alpha_A[3],
                                  rec.alpha_A[4]});
    if (rec.reference_hodge)
        doc["reference_hodge"] = json::array({rec.reference_hodge->h11, rec.reference_hodge->h12});
    return doc;
}

WeightRecord record_from_json(const json& doc)
{
    WeightRecord rec;
    rec.weight_system.weights = array5_from_json(doc.at("weights"), "weights");
    rec.weight_system.degree = doc.at("degree").get<std::uint64_t>();
    rec.family = family_from_name(doc.at("family").get<std::string>());
    if (doc.contains("exponents")) rec.exponents = array5_from_json(doc.at("exponents"), "exponents");
    rec.e = doc.at("e").get<std::uint64_t>();
    rec.d_A = doc.at("d_A").get<std::uint64_t>();
    rec.alpha_A = array5_from_json(doc.at("alpha_A"), "alpha_A");
    if (doc.contains("reference_hodge") && !doc.at("reference_hodge").is_null()) {
        const json& rh = doc.at("reference_hodge");
        rec.reference_hodge = HodgePair{rh.at(0).get<std::uint64_t>(), rh.at(1).get<std::uint64_t>()};
    }
    return rec;
}

json atlas_to_json(const HeightAtlas& atlas)
{
    json doc;
    doc["version"] = 1;
    doc["family"] = atlas.family;
    json records = json::array();
    for (std::size_t i = 0; i < atlas.records.size(); ++i) {
        json r = record_to_json(atlas.records[i]);
        if (i < atlas.spectra.size()) r["spectrum"] = spectrum_to_json(atlas.spectra[i]);
        records.push_back(std::move(r));
    }
    doc["records"] = records;
    doc["finite_heights"] = atlas.finite_heights;
    return doc;
}

HeightAtlas atlas_from_json(const json& doc)
{
    if (doc.at("version").get<int>() != 1)
        throw std::invalid_argument("unsupported atlas version");
    HeightAtlas atlas;
    atlas.family = doc.at("family").get<std::string>();
    for (const json& r : doc.at("records")) {
        atlas.records.push_back(record_from_json(r));
        if (r.contains("spectrum")) atlas.spectra.push_back(spectrum_from_json(r.at("spectrum")));
    }
    for (const json& h : doc.at("finite_heights"))
        atlas.finite_heights.insert(h.get<std::uint64_t>());
    return atlas;
}

}  // namespace delsarte
