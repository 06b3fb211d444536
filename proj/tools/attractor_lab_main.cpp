// attractor-lab: experiment runner over the finite verification engine and
// the stochastic example systems. Every report embeds its configuration and
// seed; identical invocations produce byte-identical artifacts.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "attlab/runners.hpp"

namespace fs = std::filesystem;
using namespace attlab;

namespace {

int write_artifacts(const RunArtifacts& artifacts, const std::string& out_dir,
                    const std::string& report_name) {
    fs::create_directories(out_dir);
    {
        std::ofstream f(fs::path(out_dir) / report_name);
        f << artifacts.report.dump(2) << "\n";
    }
    for (const auto& [name, content] : artifacts.files) {
        std::ofstream f(fs::path(out_dir) / name);
        f << content;
    }
    return artifacts.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attractor-lab: random-attractor verification and simulation runs"};
    app.require_subcommand(1);

    std::string out_dir = "out";
    app.add_option("--out", out_dir, "Output directory for reports and series")->capture_default_str();

    // doublewell
    DoublewellConfig dw;
    auto* cmd_dw = app.add_subcommand("doublewell", "Grid engine for the double-well system");
    cmd_dw->add_option("--grid-step", dw.grid_step)->capture_default_str();
    cmd_dw->add_option("--radius", dw.radius)->capture_default_str();
    cmd_dw->add_option("--horizon", dw.horizon)->capture_default_str();

    // finite gen / run
    auto* cmd_finite = app.add_subcommand("finite", "Finite-universe engine");
    cmd_finite->require_subcommand(1);
    int gen_count = 10;
    InstanceBounds gen_bounds;
    uint64_t gen_seed = 1;
    auto* cmd_gen = cmd_finite->add_subcommand("gen", "Generate random instances");
    cmd_gen->add_option("--count", gen_count)->capture_default_str();
    cmd_gen->add_option("--m-max", gen_bounds.max_points)->capture_default_str();
    cmd_gen->add_option("--carrier-max", gen_bounds.max_carrier)->capture_default_str();
    cmd_gen->add_option("--blocks-max", gen_bounds.max_blocks)->capture_default_str();
    cmd_gen->add_option("--seed", gen_seed)->capture_default_str();

    std::string spec_path;
    bool with_oracle = false;
    uint64_t run_seed = 1;
    auto* cmd_run = cmd_finite->add_subcommand("run", "Run one instance");
    cmd_run->add_option("--spec", spec_path, "Instance JSON file")->required();
    cmd_run->add_flag("--oracle", with_oracle, "Compare against the enumeration oracle");
    cmd_run->add_option("--seed", run_seed)->capture_default_str();

    // circle
    auto* cmd_circle = app.add_subcommand("circle", "Circle SDE experiments");
    cmd_circle->require_subcommand(1);
    CircleSyncConfig sync_cfg;
    auto* cmd_sync = cmd_circle->add_subcommand("sync", "Pullback synchronization");
    cmd_sync->add_option("--seeds", sync_cfg.seeds)->capture_default_str();
    cmd_sync->add_option("--horizon", sync_cfg.horizon)->capture_default_str();
    cmd_sync->add_option("--points", sync_cfg.points)->capture_default_str();
    cmd_sync->add_option("--seed", sync_cfg.seed)->capture_default_str();
    cmd_sync->add_option("--threads", sync_cfg.threads)->capture_default_str();

    CircleLyapunovConfig lyap_cfg;
    auto* cmd_lyap = cmd_circle->add_subcommand("lyapunov", "Lyapunov exponent estimate");
    cmd_lyap->add_option("--paths", lyap_cfg.paths)->capture_default_str();
    cmd_lyap->add_option("--T", lyap_cfg.T)->capture_default_str();
    cmd_lyap->add_option("--seed", lyap_cfg.seed)->capture_default_str();
    cmd_lyap->add_flag("--reversed", lyap_cfg.reversed, "Estimate at the unstable point");
    cmd_lyap->add_option("--threads", lyap_cfg.threads)->capture_default_str();

    CircleOmegaConfig omega_cfg;
    auto* cmd_omega = cmd_circle->add_subcommand("omega", "Discrete vs continuous omega-limits");
    cmd_omega->add_option("--seeds", omega_cfg.seeds)->capture_default_str();
    cmd_omega->add_option("--budget", omega_cfg.budget)->capture_default_str();
    cmd_omega->add_option("--seed", omega_cfg.seed)->capture_default_str();
    cmd_omega->add_option("--threads", omega_cfg.threads)->capture_default_str();

    // ou-forward
    OuForwardConfig ou_cfg;
    std::string warp_name = "triple-exp";
    auto* cmd_ou = app.add_subcommand("ou-forward", "Strip system forward attraction");
    cmd_ou->add_option("--warp", warp_name, "identity | triple-exp")->capture_default_str();
    cmd_ou->add_option("--T", ou_cfg.T)->capture_default_str();
    cmd_ou->add_option("--paths", ou_cfg.paths)->capture_default_str();
    cmd_ou->add_option("--seed", ou_cfg.seed)->capture_default_str();
    cmd_ou->add_option("--threads", ou_cfg.threads)->capture_default_str();

    // omega-union
    auto* cmd_union = app.add_subcommand("omega-union",
                                         "Closure-of-union vs minimal attractor comparison");
    std::string union_system = "finite";
    std::string union_spec;
    uint64_t union_seed = 1;
    cmd_union->add_option("--system", union_system, "finite | circle")->capture_default_str();
    cmd_union->add_option("--spec", union_spec, "Instance JSON (finite system)");
    cmd_union->add_option("--seed", union_seed)->capture_default_str();

    // --out may follow any subcommand: unmatched options fall through to the app
    for (auto* top : app.get_subcommands({})) {
        top->fallthrough();
        for (auto* nested : top->get_subcommands({})) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_dw) return write_artifacts(run_doublewell(dw), out_dir, "doublewell.json");
        if (*cmd_gen)
            return write_artifacts(run_finite_gen(gen_count, gen_bounds, gen_seed), out_dir,
                                   "finite_gen.json");
        if (*cmd_run) {
            std::ifstream f(spec_path);
            if (!f) {
                std::cerr << "attractor-lab: cannot open " << spec_path << "\n";
                return 3;
            }
            Json j = Json::parse(f);
            return write_artifacts(run_finite(instance_from_json(j), with_oracle, run_seed),
                                   out_dir, "finite_run.json");
        }
        if (*cmd_sync)
            return write_artifacts(run_circle_sync(sync_cfg), out_dir, "circle_sync.json");
        if (*cmd_lyap)
            return write_artifacts(run_circle_lyapunov(lyap_cfg), out_dir, "circle_lyapunov.json");
        if (*cmd_omega)
            return write_artifacts(run_circle_omega(omega_cfg), out_dir, "circle_omega.json");
        if (*cmd_ou) {
            if (warp_name == "identity")
                ou_cfg.warp = Warp::Identity;
            else if (warp_name == "triple-exp")
                ou_cfg.warp = Warp::TripleExp;
            else {
                std::cerr << "attractor-lab: unknown warp '" << warp_name << "'\n";
                return 3;
            }
            return write_artifacts(run_ou_forward(ou_cfg), out_dir, "ou_forward.json");
        }
        if (*cmd_union) {
            if (union_system == "finite") {
                if (union_spec.empty()) {
                    std::cerr << "attractor-lab: omega-union --system finite needs --spec\n";
                    return 3;
                }
                std::ifstream f(union_spec);
                if (!f) {
                    std::cerr << "attractor-lab: cannot open " << union_spec << "\n";
                    return 3;
                }
                Json j = Json::parse(f);
                return write_artifacts(run_omega_union_finite(instance_from_json(j)), out_dir,
                                       "omega_union.json");
            }
            if (union_system == "circle") {
                OmegaUnionCircleConfig cfg;
                cfg.seed = union_seed;
                return write_artifacts(run_omega_union_circle(cfg), out_dir, "omega_union.json");
            }
            std::cerr << "attractor-lab: unknown system '" << union_system << "'\n";
            return 3;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "attractor-lab: malformed configuration: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "attractor-lab: malformed configuration: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "attractor-lab: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
