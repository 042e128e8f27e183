// Command-line front end: height computations, residue spectra, character-set
// summaries, weight-system catalogs and persisted atlases for weighted
// Delsarte Calabi-Yau threefolds.
//
// Exit codes: 0 success, 1 validation or data failure, 2 usage error.
// `atlas diff` additionally exits 1 when the two atlases differ.

#include <CLI11.hpp>

#include "delsarte/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace delsarte;
using nlohmann::json;

namespace {

struct InputOpts {
    std::vector<std::uint64_t> fermat;
    std::vector<std::uint64_t> quasidiagonal;
    std::vector<std::uint64_t> exponents;
    std::string input_path;
};

void add_input_options(CLI::App* cmd, InputOpts& in)
{
    auto* f = cmd->add_option("--fermat", in.fermat,
                              "weights q0,...,q4 of a weighted Fermat threefold (degree = sum)")
                  ->delimiter(',')
                  ->expected(5);
    auto* q = cmd->add_option("--quasidiagonal", in.quasidiagonal,
                              "weights q0,...,q4 of a quasi-diagonal threefold (degree = sum)")
                  ->delimiter(',')
                  ->expected(5);
    auto* e = cmd->add_option("--exponents", in.exponents,
                              "exponents m0,...,m4 for --quasidiagonal")
                  ->delimiter(',')
                  ->expected(5);
    auto* i = cmd->add_option("--input", in.input_path, "path to a threefold JSON document");
    f->excludes(q)->excludes(i);
    q->excludes(i)->needs(e);
    e->needs(q);
}

DelsarteThreefold resolve_input(const InputOpts& in)
{
    auto sum5 = [](const std::vector<std::uint64_t>& w) {
        std::uint64_t s = 0;
        for (std::uint64_t x : w) s += x;
        return s;
    };
    if (!in.fermat.empty()) {
        WeightSystem q;
        std::copy(in.fermat.begin(), in.fermat.end(), q.weights.begin());
        q.degree = sum5(in.fermat);
        return DelsarteThreefold::from_fermat(q);
    }
    if (!in.quasidiagonal.empty()) {
        WeightSystem q;
        std::copy(in.quasidiagonal.begin(), in.quasidiagonal.end(), q.weights.begin());
        q.degree = sum5(in.quasidiagonal);
        std::array<std::uint64_t, 5> e;
        std::copy(in.exponents.begin(), in.exponents.end(), e.begin());
        return DelsarteThreefold::from_quasidiagonal(q, e);
    }
    if (!in.input_path.empty()) {
        std::ifstream f(in.input_path);
        if (!f) throw std::invalid_argument("cannot open " + in.input_path);
        json doc;
        try {
            doc = json::parse(f);
        } catch (const json::parse_error& e) {
            throw ParseError(in.input_path + ": " + e.what());
        }
        return threefold_from_json(doc);
    }
    throw CLI::ValidationError("one of --fermat, --quasidiagonal or --input is required");
}

std::string join(const std::array<std::uint64_t, 5>& v, const char* sep = ",")
{
    std::ostringstream os;
    for (int i = 0; i < 5; ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

void print_context_table(std::ostream& os, const DelsarteThreefold& x)
{
    os << "family: " << family_name(x.family) << "\n";
    os << "weights: " << join(x.weights.weights) << "\n";
    os << "degree: " << x.weights.degree << "\n";
    os << "d: " << x.d << "\n";
    if (x.family == Family::General)
        os << "note: quasi-smoothness of general inputs is assumed, not verified\n";
}

json context_json(const DelsarteThreefold& x)
{
    json doc;
    doc["family"] = family_name(x.family);
    doc["weights"] = x.weights.weights;
    doc["degree"] = x.weights.degree;
    doc["d"] = x.d;
    if (x.family == Family::General)
        doc["notes"] = json::array({"quasi-smoothness of general inputs is assumed, not verified"});
    return doc;
}

void require_valid(const DelsarteThreefold& x, const std::optional<CharacteristicP>& p)
{
    ValidationReport rep = validate(x, p);
    if (!rep.ok()) {
        std::ostringstream os;
        os << "validation failed:";
        for (const std::string& v : rep.violations) os << "\n  " << v;
        throw std::invalid_argument(os.str());
    }
}

Family parse_family(const std::string& s)
{
    if (s == "fermat") return Family::Fermat;
    if (s == "quasidiagonal" || s == "quasi-diagonal") return Family::QuasiDiagonal;
    throw CLI::ValidationError("family must be 'fermat' or 'quasidiagonal'");
}

std::string spectrum_table(const ResidueSpectrum& sp)
{
    std::ostringstream os;
    os << "d_A: " << sp.d_A << "\n";
    os << "phi: " << sp.phi << "\n";
    os << "height  classes  representatives\n";
    for (const SpectrumGroup& g : sp.groups) {
        std::ostringstream h;
        if (g.finite)
            h << g.height;
        else
            h << "inf";
        os << h.str();
        for (std::size_t i = h.str().size(); i < 8; ++i) os << ' ';
        std::string c = std::to_string(g.class_count);
        os << c;
        for (std::size_t i = c.size(); i < 9; ++i) os << ' ';
        for (std::size_t i = 0; i < g.representatives.size(); ++i)
            os << (i ? ", " : "") << g.representatives[i];
        if (g.representatives.size() < g.class_count) os << ", ...";
        os << "\n";
    }
    return os.str();
}

std::string spectrum_csv(const std::string& family, const WeightSystem& q,
                         const ResidueSpectrum& sp)
{
    std::ostringstream os;
    os << "family,weights,m,d_A,residue,height\n";
    std::ostringstream w;
    for (int j = 0; j < 5; ++j) w << (j ? " " : "") << q.weights[j];
    for (const auto& [t, hr] : sp.classes) {
        os << family << ',' << w.str() << ',' << q.degree << ',' << sp.d_A << ',' << t << ',';
        if (hr.finite)
            os << hr.h;
        else
            os << "inf";
        os << '\n';
    }
    return os.str();
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    std::cout << "wrote " << path << "\n";
}

int run_height(const InputOpts& in, std::uint64_t p, const std::string& format, std::uint64_t cap)
{
    DelsarteThreefold x = resolve_input(in);
    CharacteristicP cp(p);
    require_valid(x, cp);
    ReducedCharacter rc = reduce_alpha0(find_alpha0(x, cap));
    HeightResult hr = height_class(cp.p % rc.d_A, rc);

    std::optional<bool> mirror;
    if (x.reference_hodge)
        mirror = mirror_obstruction_flag(hr, x.reference_hodge->h11, x.reference_hodge->h12);

    if (format == "json") {
        json doc = height_result_to_json(hr);
        doc["threefold"] = context_json(x);
        doc["reduced"] = reduced_to_json(rc);
        doc["p"] = p;
        doc["residue"] = p % rc.d_A;
        if (mirror) {
            doc["mirror_obstruction"] = *mirror;
            if (*mirror)
                doc["mirror_obstruction_note"] =
                    "finite height exceeds min(h11,h12)+1: no symplectic quotient mirror exists";
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    print_context_table(std::cout, x);
    std::cout << "e: " << rc.e << "\nd_A: " << rc.d_A << "\nalpha_A: " << join(rc.alpha_A) << "\n";
    std::cout << "p: " << p << " (residue " << p % rc.d_A << " mod " << rc.d_A << ")\n";
    if (hr.finite) {
        std::cout << "height: " << hr.h << "\nwitness norms:";
        for (int n : hr.witness_norms) std::cout << ' ' << n;
        std::cout << "\n";
    } else {
        std::cout << "height: inf\nfirst failing orbit index: " << hr.fail_index
                  << " (norm " << hr.fail_norm << ")\n";
    }
    if (mirror) {
        std::cout << "mirror obstruction: " << (*mirror ? "yes" : "no") << "\n";
        if (*mirror)
            std::cout << "  (finite height exceeds min(h11,h12)+1: no symplectic quotient mirror)\n";
    }
    return 0;
}

int run_spectrum(const InputOpts& in, const std::string& format, std::uint64_t cap,
                 const std::string& out_path)
{
    DelsarteThreefold x = resolve_input(in);
    require_valid(x, std::nullopt);
    ReducedCharacter rc = reduce_alpha0(find_alpha0(x, cap));
    ResidueSpectrum sp = spectrum(rc);

    if (format == "json") {
        json doc = spectrum_to_json(sp);
        doc["threefold"] = context_json(x);
        write_output(doc.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        write_output(spectrum_csv(family_name(x.family), x.weights, sp), out_path);
    } else {
        std::ostringstream os;
        print_context_table(os, x);
        os << spectrum_table(sp);
        write_output(os.str(), out_path);
    }
    return 0;
}

int run_aset(const InputOpts& in, const std::string& format, std::uint64_t cap)
{
    DelsarteThreefold x = resolve_input(in);
    require_valid(x, std::nullopt);
    CharSetSummary s = enumerate_aset(x, cap);
    if (format == "json") {
        json doc = charset_to_json(s);
        doc["threefold"] = context_json(x);
        std::cout << doc.dump(2) << "\n";
    } else {
        print_context_table(std::cout, x);
        std::cout << "modulus: " << s.modulus << "\ncount: " << s.count << "\ngraded counts:";
        for (std::uint64_t c : s.graded_counts) std::cout << ' ' << c;
        std::cout << "\n";
    }
    return 0;
}

int run_reduce(const InputOpts& in, const std::string& format, std::uint64_t cap)
{
    DelsarteThreefold x = resolve_input(in);
    require_valid(x, std::nullopt);
    ReducedCharacter rc = reduce_alpha0(find_alpha0(x, cap));
    if (format == "json") {
        json doc = reduced_to_json(rc);
        doc["threefold"] = context_json(x);
        std::cout << doc.dump(2) << "\n";
    } else {
        print_context_table(std::cout, x);
        std::cout << "e: " << rc.e << "\nd_A: " << rc.d_A << "\nalpha_A: " << join(rc.alpha_A)
                  << "\n";
    }
    return 0;
}

std::vector<WeightRecord> records_for(Family fam)
{
    return fam == Family::Fermat ? fermat_records() : enumerate_quasidiagonal_weights();
}

int run_enumerate(const std::string& family, const std::string& format, const std::string& out_path)
{
    Family fam = parse_family(family);
    std::vector<WeightRecord> recs = records_for(fam);

    if (format == "json") {
        json doc;
        doc["family"] = family_name(fam);
        doc["count"] = recs.size();
        json arr = json::array();
        for (const WeightRecord& r : recs) arr.push_back(record_to_json(r));
        doc["records"] = arr;
        write_output(doc.dump(2) + "\n", out_path);
        return 0;
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "family,weights,m,exponents,d_A,alpha_A\n";
        for (const WeightRecord& r : recs) {
            std::ostringstream w, e, a;
            for (int j = 0; j < 5; ++j) {
                w << (j ? " " : "") << r.weight_system.weights[j];
                a << (j ? " " : "") << r.alpha_A[j];
                if (r.exponents) e << (j ? " " : "") << (*r.exponents)[j];
            }
            os << family_name(fam) << ',' << w.str() << ',' << r.weight_system.degree << ','
               << e.str() << ',' << r.d_A << ',' << a.str() << '\n';
        }
        write_output(os.str(), out_path);
        return 0;
    }
    std::ostringstream os;
    os << "family: " << family_name(fam) << "\ncount: " << recs.size() << "\n";
    os << "weights | m | exponents | d_A | alpha_A\n";
    for (const WeightRecord& r : recs) {
        os << join(r.weight_system.weights) << " | " << r.weight_system.degree << " | ";
        if (r.exponents) os << join(*r.exponents);
        os << " | " << r.d_A << " | " << join(r.alpha_A) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

int run_classify(const std::string& family, const std::string& format)
{
    Family fam = parse_family(family);
    std::set<std::uint64_t> heights = classify_finite_heights(records_for(fam));
    if (format == "json") {
        json doc;
        doc["family"] = family_name(fam);
        doc["finite_heights"] = heights;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "family: " << family_name(fam) << "\nfinite heights (" << heights.size()
                  << "):";
        for (std::uint64_t h : heights) std::cout << ' ' << h;
        std::cout << "\n";
    }
    return 0;
}

std::filesystem::path default_atlas_path(Family fam, const std::string& out)
{
    if (!out.empty()) return out;
    const char* dir = std::getenv("DELSARTE_ATLAS_DIR");
    std::filesystem::path base = dir ? dir : ".";
    std::string name = fam == Family::Fermat ? "atlas_fermat.json" : "atlas_quasidiagonal.json";
    return base / name;
}

int run_atlas_build(const std::string& family, const std::string& out)
{
    Family fam = parse_family(family);
    HeightAtlas atlas = build_atlas(fam);
    std::filesystem::path path = default_atlas_path(fam, out);
    save_atlas(atlas, path);
    std::cout << "wrote " << path.string() << " (" << atlas.records.size() << " records, "
              << atlas.finite_heights.size() << " finite heights)\n";
    return 0;
}

int run_atlas_diff(const std::string& a_path, const std::string& b_path)
{
    HeightAtlas a = load_atlas(a_path);
    HeightAtlas b = load_atlas(b_path);
    std::vector<std::string> diffs;
    if (a.family != b.family) diffs.push_back("family: " + a.family + " vs " + b.family);
    if (a.finite_heights != b.finite_heights) diffs.push_back("finite height sets differ");

    auto key = [](const WeightRecord& r) {
        return std::make_pair(r.weight_system.degree, r.weight_system.weights);
    };
    std::map<std::pair<std::uint64_t, std::array<std::uint64_t, 5>>, std::size_t> index_a, index_b;
    for (std::size_t i = 0; i < a.records.size(); ++i) index_a[key(a.records[i])] = i;
    for (std::size_t i = 0; i < b.records.size(); ++i) index_b[key(b.records[i])] = i;
    for (const auto& [k, ia] : index_a) {
        auto it = index_b.find(k);
        std::string label = "(" + std::to_string(k.first) + "; " + join(k.second) + ")";
        if (it == index_b.end()) {
            diffs.push_back("only in " + a_path + ": " + label);
            continue;
        }
        const WeightRecord& ra = a.records[ia];
        const WeightRecord& rb = b.records[it->second];
        if (ra.d_A != rb.d_A || ra.alpha_A != rb.alpha_A || ra.exponents != rb.exponents)
            diffs.push_back("record differs: " + label);
        else if (ia < a.spectra.size() && it->second < b.spectra.size() &&
                 !(a.spectra[ia].groups == b.spectra[it->second].groups))
            diffs.push_back("spectrum differs: " + label);
    }
    for (const auto& [k, ib] : index_b)
        if (!index_a.contains(k))
            diffs.push_back("only in " + b_path + ": (" + std::to_string(k.first) + "; " +
                            join(k.second) + ")");

    if (diffs.empty()) {
        std::cout << "atlases are identical\n";
        return 0;
    }
    for (const std::string& d : diffs) std::cout << d << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"height of the formal group of weighted Delsarte Calabi-Yau threefolds"};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format = [&format](CLI::App* cmd, bool with_csv) {
        std::vector<std::string> choices = {"table", "json"};
        if (with_csv) choices.push_back("csv");
        cmd->add_option("--format", format, "output format")
            ->transform(CLI::IsMember(choices))
            ->capture_default_str();
    };

    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t p = 0;
    std::string family, out_path, diff_a, diff_b;
    InputOpts in;

    CLI::App* c_height = app.add_subcommand("height", "height of the formal group at p");
    add_input_options(c_height, in);
    c_height->add_option("-p,--characteristic", p, "characteristic (a prime)")->required();
    c_height->add_option("--cap", cap, "enumeration size cap")->capture_default_str();
    add_format(c_height, false);

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "heights for every residue class mod d_A");
    add_input_options(c_spectrum, in);
    c_spectrum->add_option("--cap", cap)->capture_default_str();
    c_spectrum->add_option("--output", out_path, "write to a file instead of stdout");
    add_format(c_spectrum, true);

    CLI::App* c_aset = app.add_subcommand("aset", "character set summary with graded counts");
    add_input_options(c_aset, in);
    c_aset->add_option("--cap", cap)->capture_default_str();
    add_format(c_aset, false);

    CLI::App* c_reduce = app.add_subcommand("reduce", "reduced character data (e, d_A, alpha_A)");
    add_input_options(c_reduce, in);
    c_reduce->add_option("--cap", cap)->capture_default_str();
    add_format(c_reduce, false);

    CLI::App* c_enum = app.add_subcommand("enumerate", "weight-system catalog for a family");
    c_enum->add_option("family", family, "fermat | quasidiagonal")->required();
    c_enum->add_option("--output", out_path, "write to a file instead of stdout");
    add_format(c_enum, true);

    CLI::App* c_classify = app.add_subcommand("classify", "finite-height set over a catalog");
    c_classify->add_option("family", family, "fermat | quasidiagonal")->required();
    add_format(c_classify, false);

    CLI::App* c_atlas = app.add_subcommand("atlas", "persisted atlases");
    c_atlas->require_subcommand(1);
    CLI::App* c_build = c_atlas->add_subcommand("build", "build and save the atlas for a family");
    c_build->add_option("family", family, "fermat | quasidiagonal")->required();
    c_build->add_option("--output", out_path,
                        "output file (default: $DELSARTE_ATLAS_DIR/atlas_<family>.json)");
    CLI::App* c_diff = c_atlas->add_subcommand("diff", "compare two atlas files");
    c_diff->add_option("a", diff_a, "first atlas")->required();
    c_diff->add_option("b", diff_b, "second atlas")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_height)) return run_height(in, p, format, cap);
        if (app.got_subcommand(c_spectrum)) return run_spectrum(in, format, cap, out_path);
        if (app.got_subcommand(c_aset)) return run_aset(in, format, cap);
        if (app.got_subcommand(c_reduce)) return run_reduce(in, format, cap);
        if (app.got_subcommand(c_enum)) return run_enumerate(family, format, out_path);
        if (app.got_subcommand(c_classify)) return run_classify(family, format);
        if (c_atlas->got_subcommand(c_build)) return run_atlas_build(family, out_path);
        if (c_atlas->got_subcommand(c_diff)) return run_atlas_diff(diff_a, diff_b);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
