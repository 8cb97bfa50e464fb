#include "bierfan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bierfan/json_io.hpp"

namespace bierfan::cli {

namespace {

json load_input(const std::string& src) {
    std::string text;
    if (src == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (!src.empty() && src.front() == '{') {
        text = src;
    } else {
        std::ifstream in(src);
        if (!in) throw std::invalid_argument("cannot open input file '" + src + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

SimplicialComplex load_complex(const std::string& src) {
    const SimplicialComplex K = complex_from_json(load_input(src));
    if (K.is_full_simplex())
        throw std::domain_error("K must differ from the full simplex");
    return K;
}

std::string label_str(int label, int primed_offset) {
    if (primed_offset > 0 && label > primed_offset)
        return std::to_string(label - primed_offset) + "'";
    return std::to_string(label);
}

std::string set_str(FaceMask f, int primed_offset) {
    std::string s = "{";
    bool first = true;
    for (int l : mask_labels(f)) {
        if (!first) s += ",";
        s += label_str(l, primed_offset);
        first = false;
    }
    return s + "}";
}

std::string complex_text(const SimplicialComplex& K, int primed_offset) {
    std::vector<FaceMask> facets = K.facet_masks();
    std::sort(facets.begin(), facets.end(), label_lex_less);
    std::string s = "m = " + std::to_string(K.ground_size()) + "\nfacets:";
    for (FaceMask f : facets) s += " " + set_str(f, primed_offset);
    return s + "\n";
}

std::string joined(const std::vector<long long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

struct Flags {
    std::string input;
    std::string format = "json";
    std::string out_path;
    std::string point;
    int samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
    int classify_m = 0;
    bool check_fans = true;
    bool strip_ghosts = false;
};

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    Flags flags;

    CLI::App app{"Bier spheres, their canonical complete regular fans, and toric invariants"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("input", flags.input,
                            "complex as a file path, inline JSON, or '-' for stdin")
                ->required();
        sub->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", flags.out_path, "write output to a file instead of stdout");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--samples", flags.samples, "number of sampled points")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", flags.seed, "sampling seed")->envname("BIERFAN_SEED");
    };

    CLI::App* dual = app.add_subcommand("dual", "Alexander dual of a complex");
    add_common(dual, true);
    CLI::App* bier = app.add_subcommand("bier", "Bier sphere of a complex");
    add_common(bier, true);
    bier->add_flag("--strip-ghosts", flags.strip_ghosts,
                   "emit the ghost-stripped complex instead");
    CLI::App* fan = app.add_subcommand("fan", "canonical fan of the Bier sphere");
    add_common(fan, true);
    CLI::App* verify = app.add_subcommand("verify", "regularity and completeness checks");
    add_common(verify, true);
    add_sampling(verify);
    CLI::App* report = app.add_subcommand("report", "toric invariants of the canonical fan");
    add_common(report, true);
    CLI::App* locate = app.add_subcommand("locate", "locate a rational point in the fan");
    add_common(locate, true);
    locate->add_option("--point", flags.point, "comma-separated rationals, e.g. 1/2,-3")
        ->required();
    CLI::App* classify = app.add_subcommand("classify", "classify Bier spheres on [m]");
    add_common(classify, false);
    classify->add_option("--m", flags.classify_m, "ground set size")->required();
    classify->add_flag("--check-fans,!--no-check-fans", flags.check_fans,
                       "verify each class representative's fan");
    add_sampling(classify);

    std::vector<std::string> argv_storage;
    argv_storage.push_back("bierfan");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = 2;
        result.err = std::string(e.what()) + "\n";
        return result;
    }

    const bool text = flags.format == "text";
    try {
        if (dual->parsed()) {
            const SimplicialComplex d = alexander_dual(load_complex(flags.input));
            result.out = text ? complex_text(d, 0) : dump_canonical(complex_to_json(d));
        } else if (bier->parsed()) {
            const BierComplex B = bier_sphere(load_complex(flags.input));
            if (flags.strip_ghosts) {
                const SimplicialComplex stripped = strip_ghost_vertices(B.complex);
                result.out =
                    text ? complex_text(stripped, 0) : dump_canonical(complex_to_json(stripped));
            } else {
                result.out =
                    text ? complex_text(B.complex, B.m) : dump_canonical(bier_to_json(B));
            }
        } else if (fan->parsed()) {
            const Fan F = canonical_fan(bier_sphere(load_complex(flags.input)));
            if (text) {
                std::string s = "m = " + std::to_string(F.m) + ", ambient dimension " +
                                std::to_string(F.m - 1) + "\n";
                for (const Cone& c : F.max_cones) {
                    s += tag_str(c.tag) + " generators:";
                    for (const LatticeVector& g : c.generators) s += " " + joined(g.c);
                    s += "\n";
                }
                result.out = s;
            } else {
                result.out = dump_canonical(fan_to_json(F));
            }
        } else if (verify->parsed()) {
            const Fan F = canonical_fan(bier_sphere(load_complex(flags.input)));
            const CompletenessReport rep = verify_complete(F, flags.samples, flags.seed);
            if (text) {
                result.out = std::string("regular: ") + (rep.regular ? "yes" : "no") +
                             "\ncomplete: " + rep.verdict() + "\n";
                if (!rep.complete() && !rep.detail.empty())
                    result.out += "witness: " + rep.detail + "\n";
            } else {
                result.out = dump_canonical(completeness_to_json(rep, true));
            }
            result.status = rep.complete() ? 0 : 1;
        } else if (report->parsed()) {
            const ToricReport r = toric_report(bier_sphere(load_complex(flags.input)));
            if (text) {
                std::string s;
                s += "m = " + std::to_string(r.m) + "\n";
                s += "f = " + joined(r.fh.f) + "\nh = " + joined(r.fh.h) + "\n";
                s += "betti = " + joined(r.betti) + "\n";
                s += "euler = " + std::to_string(r.euler) + "\n";
                s += "dim_Z = " + std::to_string(r.dims.dim_Z) +
                     ", dim_R = " + std::to_string(r.dims.dim_R) +
                     ", dim_M = " + std::to_string(r.dims.dim_M) +
                     ", dim_M_real = " + std::to_string(r.dims.dim_M_real) +
                     ", rank_H = " + std::to_string(r.dims.rank_H) + "\n";
                s += std::string("dehn_sommerville: ") + (r.ds_ok ? "ok" : "VIOLATED") + "\n";
                s += std::string("orientable_real: ") +
                     (r.orientability.criterion ? "yes" : "no") + " (m " +
                     (r.orientability.m_even ? "even" : "odd") + ", " +
                     (r.orientability.matches ? "matches" : "MISMATCH") + ")\n";
                result.out = s;
            } else {
                result.out = dump_canonical(toric_report_to_json(r));
            }
        } else if (locate->parsed()) {
            const Fan F = canonical_fan(bier_sphere(load_complex(flags.input)));
            const RationalPoint x = parse_point(flags.point);
            try {
                const ConeTag tag = locate_point(F, x);
                if (text) {
                    result.out = "I = " + set_str(tag.I, 0) + ", J = " + set_str(tag.J, 0) + "\n";
                } else {
                    result.out = dump_canonical(
                        json{{"I", mask_labels(tag.I)}, {"J", mask_labels(tag.J)}});
                }
            } catch (const FanInvariantError& e) {
                json tags = json::array();
                for (const ConeTag& t : e.tags())
                    tags.push_back(json{{"I", mask_labels(t.I)}, {"J", mask_labels(t.J)}});
                result.out =
                    dump_canonical(json{{"error", std::string(e.what())}, {"tags", tags}});
                result.status = 1;
            }
        } else if (classify->parsed()) {
            const ClassificationReport r =
                classify_bier(flags.classify_m, flags.check_fans, flags.samples, flags.seed);
            if (text) {
                std::string s = "m = " + std::to_string(r.m) + ": " +
                                std::to_string(r.total_complexes) + " complexes, " +
                                std::to_string(r.classes.size()) + " Bier classes\n";
                for (const BierClass& cls : r.classes) {
                    s += "  vertices " + std::to_string(cls.canonical.ground_size()) +
                         ", multiplicity " + std::to_string(cls.multiplicity) + ", f = " +
                         joined(cls.fh.f);
                    if (r.fans_checked)
                        s += cls.fan_regular && cls.fan_complete ? ", fan verified"
                                                                 : ", FAN CHECK FAILED";
                    s += "\n";
                }
                result.out = s;
            } else {
                result.out = dump_canonical(classification_to_json(r));
            }
        }
    } catch (const FanInvariantError& e) {
        result.status = 1;
        result.err = std::string(e.what()) + "\n";
        return result;
    } catch (const json::exception& e) {
        result.status = 2;
        result.err = std::string("malformed JSON value: ") + e.what() + "\n";
        return result;
    } catch (const std::invalid_argument& e) {
        result.status = 2;
        result.err = std::string(e.what()) + "\n";
        return result;
    } catch (const std::domain_error& e) {
        result.status = 2;
        result.err = std::string(e.what()) + "\n";
        return result;
    } catch (const std::overflow_error& e) {
        result.status = 2;
        result.err = std::string(e.what()) + "\n";
        return result;
    }

    if (!flags.out_path.empty()) {
        std::ofstream out(flags.out_path);
        if (!out) {
            result.status = 2;
            result.err = "cannot write output file '" + flags.out_path + "'\n";
            return result;
        }
        out << result.out;
        result.out.clear();
    }
    return result;
}

}  // namespace bierfan::cli
