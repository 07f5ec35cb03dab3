// End-to-end exercise of the installed CLI surface. Takes the path to the
// colocate binary as argv[1], works in a scratch directory, and checks exit
// codes plus the artifacts each subcommand promises.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return status;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string first_line(const fs::path& path) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_smoke <path-to-colocate>\n";
        return 2;
    }
    std::string bin = argv[1];
    fs::path dir = fs::temp_directory_path() / "colocate_cli_smoke";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string d = dir.string();

    expect(run(bin + " synth assoc --seed 7 --out " + d + "/synth.csv") == 0, "synth assoc");
    expect(first_line(dir / "synth.csv") == "id,feature,shape_type,coords,amount",
           "dataset header");

    expect(run(bin + " synth pair --lo 0.4 --hi 0.6 --seed 3 --out " + d + "/pair.csv") == 0,
           "synth pair");

    std::string mine_cmd = bin + " mine --input " + d + "/synth.csv" +
                           " --grid 1.0 --model curve --R 19 --alpha 0.05" +
                           " --max-antecedent 2 --consequent D --seed 42 --null random" +
                           " --out " + d + "/run";
    expect(run(mine_cmd) == 0, "mine");
    for (const char* name :
         {"report.json", "report.csv", "survivors.csv", "timings.csv", "manifest.json"}) {
        expect(fs::exists(dir / "run" / name), std::string("artifact ") + name);
    }
    expect(first_line(dir / "run" / "report.csv") == "rule,expsup,expconf,p_value",
           "report header");

    // A rerun from the manifest reproduces the deterministic artifacts.
    fs::create_directories(dir / "run2");
    fs::copy_file(dir / "run" / "manifest.json", dir / "run2" / "manifest.json");
    std::string reproduce = bin + " mine --from-manifest " + d + "/run2/manifest.json";
    // Redirect the rerun into run2 by rewriting out_dir through the manifest:
    // simpler here to rerun into the same directory and compare against kept
    // copies.
    std::string json_before = slurp(dir / "run" / "report.json");
    std::string csv_before = slurp(dir / "run" / "report.csv");
    std::string survivors_before = slurp(dir / "run" / "survivors.csv");
    expect(run(reproduce) == 0, "mine --from-manifest");
    expect(slurp(dir / "run" / "report.json") == json_before, "manifest rerun json identical");
    expect(slurp(dir / "run" / "report.csv") == csv_before, "manifest rerun csv identical");
    expect(slurp(dir / "run" / "survivors.csv") == survivors_before,
           "manifest rerun survivors identical");

    expect(run(bin + " baseline --input " + d + "/synth.csv --grid 1.0 --R 19" +
               " --consequent D --max-antecedent 2 --seed 42 --null random --out " + d +
               "/base") == 0,
           "baseline");
    expect(fs::exists(dir / "base" / "baseline_report.csv"), "baseline report");
    expect(fs::exists(dir / "base" / "baseline_summary.json"), "baseline summary");

    expect(run(bin + " transactions --input " + d + "/synth.csv --grid 1.0 --tx-out " + d +
               "/tx.csv") == 0,
           "transactions dump");
    expect(first_line(dir / "tx.csv") == "gx,gy,feature,probability", "transactions header");

    expect(run(bin + " bench distance --ranges 4 --datasets 2 --grid 0.5 --seed 1 --out " + d +
               "/dist.csv") == 0,
           "bench distance");
    expect(first_line(dir / "dist.csv") == "lo,hi,avg_expsup", "bench distance header");

    expect(run(bin + " bench granularity --input " + d + "/synth.csv --consequent D --R 5" +
               " --grids 2.0,1.0 --null random --bench-out " + d + "/gran.csv") == 0,
           "bench granularity");
    expect(first_line(dir / "gran.csv") == "spacing,transactions,rules,wall_ms",
           "bench granularity header");

    expect(run(bin + " bench runtime --input " + d + "/synth.csv --consequent D" +
               " --grid 1.0 --R-list 5,10 --null random --bench-out " + d + "/rt.csv") == 0,
           "bench runtime");
    expect(first_line(dir / "rt.csv") == "R,wall_ms", "bench runtime header");

    // Wind-field runs: stations CSV feeds elliptical buffers end to end.
    {
        std::ofstream stations(dir / "stations.csv");
        stations << "station_id,x,y,speed,direction\n"
                    "n1,10,10,12,45\n"
                    "n2,80,80,6,270\n";
        std::ofstream emitters(dir / "emitters.csv");
        emitters << "id,feature,shape_type,coords,amount\n"
                    "e1,SO2,point,20 20,1000\n"
                    "e2,SO2,point,60 60,50000\n"
                    "e3,NOX,point,21 21,2000\n"
                    "c1,CASE,point,22 22,\n"
                    "c2,CASE,point,61 61,\n";
    }
    expect(run(bin + " mine --input " + d + "/emitters.csv --wind " + d + "/stations.csv" +
               " --grid 0.5 --R 9 --consequent CASE --radius 2.0 --seed 5 --null random" +
               " --out " + d + "/windrun") == 0,
           "mine with wind field");
    expect(fs::exists(dir / "windrun" / "report.json"), "wind run report");

    expect(run(bin + " mine --input " + d + "/synth.csv --mode patterns --grid 1.0 --R 9" +
               " --max-antecedent 2 --seed 2 --null random --out " + d + "/patterns") == 0,
           "mine patterns mode");
    expect(first_line(dir / "patterns" / "report.csv") == "pattern,expsup,p_value",
           "patterns report header");

    // COLOCATE_THREADS caps workers; the artifacts must not change.
    std::string json_serial = slurp(dir / "run" / "report.json");
    expect(run("COLOCATE_THREADS=2 " + mine_cmd + " --threads 16") == 0,
           "mine under COLOCATE_THREADS cap");
    expect(slurp(dir / "run" / "report.json") == json_serial,
           "capped parallel run json identical");

    // Validation failures exit nonzero with a diagnostic.
    expect(run(bin + " mine --input " + d + "/missing.csv --consequent D 2>/dev/null") != 0,
           "missing input rejected");
    {
        std::ofstream bad(dir / "bad.csv");
        bad << "id,feature,shape_type,coords,amount\nx1,A,polygon,0 0;1 1,\n";
    }
    expect(run(bin + " mine --input " + d + "/bad.csv --consequent D 2>/dev/null") != 0,
           "malformed row rejected");

    fs::remove_all(dir);
    std::printf("%s\n", failures == 0 ? "cli smoke: all checks passed" : "cli smoke: FAILURES");
    return failures == 0 ? 0 : 1;
}
