// strata: exact intersection homology of stratified simplicial
// pseudomanifolds, Euler-characteristic calculus and Poincare-Hopf checks.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/euler.hpp"
#include "strata/gallery.hpp"
#include "strata/hopf.hpp"
#include "strata/intersection.hpp"
#include "strata/io.hpp"

using nlohmann::ordered_json;
using namespace strata;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 3;

struct SpaceInput {
    StratifiedSpace space;
    int subdivisions = 0;
    std::string name;
};

// A space argument is a file when it exists on disk, else a gallery name.
SpaceInput load_space(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        io::SpaceDocument doc = io::parse_space_json(io::read_file(arg));
        return SpaceInput{io::space_from_document(doc), doc.subdivisions, arg};
    }
    const GalleryEntry& e = gallery_entry(arg);
    return SpaceInput{gallery(arg), e.subdivisions, arg};
}

linalg::RankOptions rank_options(const std::string& engine) {
    linalg::RankOptions opts;
    if (engine == "exact")
        opts.engine = linalg::RankEngine::Exact;
    else if (engine == "modular")
        opts.engine = linalg::RankEngine::Modular;
    else if (engine == "checked")
        opts.engine = linalg::RankEngine::Checked;
    else
        throw InputError("unknown rank engine '" + engine + "'");
    return opts;
}

void gate_chain_level(const SpaceInput& si, bool force_chains) {
    if (si.space.n() >= 5 && !force_chains)
        throw InputError("chain-level intersection homology of '" + si.name +
                         "' (dimension " + std::to_string(si.space.n()) +
                         ") can be very large; pass --force-chains to run it anyway");
}

std::string csv_ih(const IHDims& d) {
    std::string out = "degree,dim\n";
    for (std::size_t i = 0; i < d.dims.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(d.dims[i]) + "\n";
    return out;
}

std::string text_ih(const IHDims& d) {
    std::string out;
    for (std::size_t i = 0; i < d.dims.size(); ++i) {
        if (i) out += ", ";
        out += "i=" + std::to_string(i) + ":" + std::to_string(d.dims[i]);
    }
    return out + "\n";
}

int cmd_gallery(const std::string& name, const std::string& out_path) {
    const GalleryEntry& e = gallery_entry(name);
    io::SpaceDocument doc = io::document_from_space(gallery(name), e.subdivisions);
    std::string text = io::write_space_json(doc);
    if (out_path.empty())
        std::cout << text;
    else
        io::write_file(out_path, text);
    return kExitOk;
}

int cmd_list_gallery(const std::string& format) {
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const GalleryEntry& e : list_gallery()) {
            ordered_json ej;
            ej["name"] = e.name;
            ej["description"] = e.description;
            ej["dimension"] = e.n;
            ej["subdivisions"] = e.subdivisions;
            if (!e.card.homology.empty()) ej["homology"] = e.card.homology;
            if (!e.card.ichi.empty()) {
                ordered_json ichi;
                for (const auto& [p, v] : e.card.ichi) ichi[p] = v;
                ej["ichi"] = std::move(ichi);
            }
            if (!e.card.ih.empty()) {
                ordered_json ih;
                for (const auto& [p, dims] : e.card.ih) ih[p] = dims;
                ej["ih"] = std::move(ih);
            }
            j.push_back(std::move(ej));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const GalleryEntry& e : list_gallery())
            std::cout << e.name << " (n=" << e.n << "): " << e.description << "\n";
    }
    return kExitOk;
}

int cmd_ih(const std::string& space_arg, const std::string& perversity, int subdivide,
           const std::string& format, const std::string& engine, bool force_chains) {
    SpaceInput si = load_space(space_arg);
    gate_chain_level(si, force_chains);
    const int n = si.space.n();
    const Perversity p = Perversity::parse(perversity, n);
    const int subs = subdivide >= 0 ? subdivide : si.subdivisions;
    IHDims d = ih_dims(si.space, p, subs, rank_options(engine));
    d.space = si.name;
    if (format == "json") {
        ordered_json j;
        j["space"] = si.name;
        j["perversity"] = p.display_name();
        j["subdivisions"] = subs;
        j["dims"] = d.dims;
        j["ichi"] = d.euler();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv_ih(d);
    } else {
        std::cout << text_ih(d);
    }
    return kExitOk;
}

int cmd_chi(const std::string& space_arg, const std::string& perversity,
            const std::string& method, int subdivide, const std::string& format,
            const std::string& engine, bool force_chains) {
    SpaceInput si = load_space(space_arg);
    const Perversity p = Perversity::parse(perversity, si.space.n());
    const int subs = subdivide >= 0 ? subdivide : si.subdivisions;
    const linalg::RankOptions opts = rank_options(engine);
    std::optional<std::int64_t> direct, stratumwise;
    if (method == "direct" || method == "both") {
        gate_chain_level(si, force_chains);
        direct = ichi_c_direct(si.space, p, subs, opts);
    }
    if (method == "stratumwise" || method == "both")
        stratumwise = ichi_c_stratumwise(si.space, p, opts).total;
    if (format == "json") {
        ordered_json j;
        j["space"] = si.name;
        j["perversity"] = p.display_name();
        if (direct) j["direct"] = *direct;
        if (stratumwise) j["stratumwise"] = *stratumwise;
        if (direct && stratumwise) j["equal"] = (*direct == *stratumwise);
        std::cout << j.dump(2) << "\n";
    } else {
        if (direct) std::cout << "direct = " << *direct << "\n";
        if (stratumwise) std::cout << "stratumwise = " << *stratumwise << "\n";
    }
    if (direct && stratumwise && *direct != *stratumwise) {
        std::cerr << "error: direct and stratumwise I-chi disagree (" << *direct << " vs "
                  << *stratumwise << ")\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_multiplicity(const std::string& space_arg, int stratum, int component,
                     const std::string& perversity, const std::string& format,
                     const std::string& engine) {
    SpaceInput si = load_space(space_arg);
    const Perversity p = Perversity::parse(perversity, si.space.n());
    auto comps = stratum_components(si.space);
    for (const StratumComponent& c : comps) {
        if (c.stratum_id != stratum || c.component != component) continue;
        std::int64_t m = multiplicity(si.space, p, c, rank_options(engine));
        if (format == "json") {
            ordered_json j;
            j["space"] = si.name;
            j["perversity"] = p.display_name();
            j["stratum"] = stratum;
            j["component"] = component;
            j["multiplicity"] = m;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << m << "\n";
        }
        return kExitOk;
    }
    throw InputError("no stratum component (stratum " + std::to_string(stratum) +
                     ", component " + std::to_string(component) + ")");
}

int cmd_verify_ph(const std::string& space_arg, const std::string& zeros_path,
                  const std::string& perversity, int subdivide, const std::string& format,
                  const std::string& engine, bool force_chains) {
    SpaceInput si = load_space(space_arg);
    gate_chain_level(si, force_chains);
    const Perversity p = Perversity::parse(perversity, si.space.n());
    const int subs = subdivide >= 0 ? subdivide : si.subdivisions;
    io::ZerosDocument zeros = io::parse_zeros_json(io::read_file(zeros_path));
    PHReport rep = verify_poincare_hopf(si.space, p, zeros.zeros, subs, rank_options(engine));
    if (format == "json") {
        ordered_json j;
        j["space"] = si.name;
        j["perversity"] = rep.perversity;
        j["ichi"] = rep.ichi;
        ordered_json rows = ordered_json::array();
        for (const PHRow& r : rep.rows) {
            ordered_json rj;
            rj["stratum"] = r.zero.stratum_id;
            rj["component"] = r.zero.component;
            rj["label"] = r.zero.label;
            rj["chi_c"] = r.chi_c;
            rj["multiplicity"] = r.multiplicity;
            rj["index"] = r.zero.index;
            rj["singular_index"] = r.singular_index;
            rows.push_back(std::move(rj));
        }
        j["zeros"] = std::move(rows);
        j["sum"] = rep.sum;
        j["verdict"] = rep.equal ? "equal" : "mismatch";
        if (!rep.equal) j["difference"] = rep.difference();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "stratum,component,chi_c,multiplicity,index,singular_index\n";
        for (const PHRow& r : rep.rows)
            std::cout << r.zero.stratum_id << "," << r.zero.component << "," << r.chi_c << ","
                      << r.multiplicity << "," << r.zero.index << "," << r.singular_index
                      << "\n";
    } else {
        std::cout << "perversity: " << rep.perversity << "\n";
        std::cout << "I-chi = " << rep.ichi << "\n";
        for (const PHRow& r : rep.rows)
            std::cout << "  zero on stratum " << r.zero.stratum_id << " component "
                      << r.zero.component << ": multiplicity " << r.multiplicity << " x index "
                      << r.zero.index << " = " << r.singular_index
                      << (r.zero.label.empty() ? "" : "  (" + r.zero.label + ")") << "\n";
        std::cout << "sum of singular indices = " << rep.sum << "\n";
        std::cout << "verdict: " << (rep.equal ? "equal" : "mismatch") << "\n";
    }
    if (!rep.equal) {
        std::cerr << "error: Poincare-Hopf sides disagree by " << rep.difference() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_converse(const std::string& space_arg, const std::string& format) {
    SpaceInput si = load_space(space_arg);
    ConverseResult r = nonsingular_radial_exists(si.space);
    if (format == "json") {
        ordered_json j;
        j["space"] = si.name;
        j["exists"] = r.exists;
        ordered_json ws = ordered_json::array();
        for (const ConverseWitness& w : r.witnesses) {
            ordered_json wj;
            wj["stratum"] = w.stratum_id;
            wj["component"] = w.component;
            wj["dim"] = w.dim;
            wj["chi_c"] = w.chi_c;
            ws.push_back(std::move(wj));
        }
        j["witnesses"] = std::move(ws);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "nonsingular totally radial field exists: " << (r.exists ? "yes" : "no")
                  << "\n";
        for (const ConverseWitness& w : r.witnesses)
            std::cout << "  witness: stratum " << w.stratum_id << " component " << w.component
                      << " (dim " << w.dim << ") has chi_c = " << w.chi_c << "\n";
    }
    return r.exists ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection homology and stratified Poincare-Hopf verification"};
    app.require_subcommand(1);

    std::string space_arg, perversity = "zero", out_path, format = "text";
    std::string engine = "exact", method = "both", zeros_path, gallery_name;
    int subdivide = -1, stratum = 0, component = 0;
    bool force_chains = false;

    auto add_common = [&](CLI::App* cmd, bool with_perversity) {
        cmd->add_option("space", space_arg, "space file or gallery name")->required();
        if (with_perversity)
            cmd->add_option("--perversity", perversity,
                            "zero | lower-middle | upper-middle | top | custom:p2,..,pn");
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--rank-engine", engine)
            ->check(CLI::IsMember({"exact", "modular", "checked"}));
    };

    CLI::App* cg = app.add_subcommand("gallery", "write a gallery space file");
    cg->add_option("name", gallery_name, "gallery space name")->required();
    cg->add_option("--out", out_path, "output path (stdout when omitted)");

    CLI::App* cl = app.add_subcommand("list-gallery", "list gallery spaces and expected values");
    cl->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* ci = app.add_subcommand("ih", "intersection homology dimensions");
    add_common(ci, true);
    ci->add_option("--subdivide", subdivide, "barycentric subdivisions before computing");
    ci->add_flag("--force-chains", force_chains);

    CLI::App* cc = app.add_subcommand("chi", "I-chi, direct and/or stratumwise");
    add_common(cc, true);
    cc->add_option("--method", method)->check(CLI::IsMember({"direct", "stratumwise", "both"}));
    cc->add_option("--subdivide", subdivide);
    cc->add_flag("--force-chains", force_chains);

    CLI::App* cm = app.add_subcommand("multiplicity", "multiplicity at a stratum component");
    add_common(cm, true);
    cm->add_option("--stratum", stratum)->required();
    cm->add_option("--component", component);

    CLI::App* cv = app.add_subcommand("verify-ph", "verify the Poincare-Hopf formula");
    cv->add_option("space", space_arg)->required();
    cv->add_option("zeros", zeros_path, "zeros file")->required();
    cv->add_option("--perversity", perversity);
    cv->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    cv->add_option("--rank-engine", engine)
        ->check(CLI::IsMember({"exact", "modular", "checked"}));
    cv->add_option("--subdivide", subdivide);
    cv->add_flag("--force-chains", force_chains);

    CLI::App* cx = app.add_subcommand("converse", "existence of a nonsingular radial field");
    cx->add_option("space", space_arg)->required();
    cx->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (cg->parsed()) return cmd_gallery(gallery_name, out_path);
        if (cl->parsed()) return cmd_list_gallery(format);
        if (ci->parsed())
            return cmd_ih(space_arg, perversity, subdivide, format, engine, force_chains);
        if (cc->parsed())
            return cmd_chi(space_arg, perversity, method, subdivide, format, engine,
                           force_chains);
        if (cm->parsed())
            return cmd_multiplicity(space_arg, stratum, component, perversity, format, engine);
        if (cv->parsed())
            return cmd_verify_ph(space_arg, zeros_path, perversity, subdivide, format, engine,
                                 force_chains);
        if (cx->parsed()) return cmd_converse(space_arg, format);
        return kExitBadInput;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
