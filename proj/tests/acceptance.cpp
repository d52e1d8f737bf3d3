// One PASS/FAIL line per acceptance criterion. All comparisons are exact.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "gregory/bernoulli2.hpp"
#include "gregory/classical.hpp"
#include "gregory/qbernoulli2.hpp"
#include "gregory/serialization.hpp"
#include "oracles.hpp"

using namespace gregory;
using Json = nlohmann::ordered_json;

namespace {

// Appends a reason to `why` and returns false when `ok` is false.
struct Checker {
    std::string why;

    bool operator()(bool ok, const std::string& what) {
        if (!ok && why.empty()) {
            why = what;
        }
        return ok;
    }
    bool ok() const { return why.empty(); }
};

std::string describe(const VerificationReport& r) {
    std::string s = r.identity + " checked " + std::to_string(r.instances_checked);
    if (r.first_failure) {
        s += ", first failure lhs=" + r.first_failure->lhs + " rhs=" + r.first_failure->rhs;
    }
    return s;
}

bool report_ok(Checker& c, const VerificationReport& r, std::uint64_t expected_instances) {
    return c(r.passed(), describe(r)) &&
           c(r.instances_checked == expected_instances,
             r.identity + ": expected " + std::to_string(expected_instances) + " instances, got " +
                 std::to_string(r.instances_checked));
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Checker&)>& body) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << ms << " ms)";
    if (!c.ok()) {
        std::cout << " -- " << c.why;
        ++failures;
    }
    std::cout << std::endl;
}

struct Shell {
    int code;
    std::string out;
};

Shell run_tool(const std::string& args) {
    const std::string cmd = std::string("'") + GREGORY_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed");
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main() {
    criterion(1, "b_n recurrence equals series inversion for n <= 200, spot values n <= 5", [](Checker& c) {
        const B2Table t = b2_compute(200);
        c(t == b2_by_series(200), "tables differ");
        const std::vector<Rational> spot = {1, Rational(1, 2), Rational(-1, 12), Rational(1, 24), Rational(-19, 720),
                                            Rational(3, 160)};
        for (long n = 0; n <= 5; ++n) {
            c(t.at(n) == spot[static_cast<std::size_t>(n)], "spot value at n=" + std::to_string(n));
        }
    });

    criterion(2, "sum-of-products closed form, 1 <= N <= 8, 1 <= n <= 60", [](Checker& c) {
        report_ok(c, verify_theorem1({1, 8}, {1, 60}, 1), 480);
    });

    criterion(3, "rows N = 2 and N = 3 of the polynomial array", [](Checker& c) {
        const ATable a = a_table_build(3);
        const auto x = [](long r) { return Polynomial::linear_factor(r); };
        const Rational half(1, 2);
        c(a.at(2, 0) == -x(1) && a.at(2, 1) == -x(2), "N = 2 row");
        c(a.at(3, 0) == half * x(1) * x(2), "a_0^(3)");
        c(a.at(3, 1) == half * x(2) * Polynomial{-5, 2}, "a_1^(3)");
        c(a.at(3, 2) == half * x(3) * x(3), "a_2^(3)");
        report_ok(c, verify_s2s3(), 5);
    });

    criterion(4, "boundary lines a_0^(N) and a_{N-1}^(N) for N <= 10", [](Checker& c) {
        report_ok(c, verify_boundary_lines(10), 19);
    });

    criterion(5, "q-convolution identity: symbolic n <= 15, sampled at 5 points n <= 40, n = 0 gives 1/q",
              [](Checker& c) {
                  const QB2Table t = qb2_compute(1);
                  const RationalFunction inv_q = RationalFunction::q_power(-1);
                  c(qtheorem2_lhs(t, 0) == inv_q && qtheorem2_rhs(t, 0) == inv_q, "n = 0 sides");
                  report_ok(c, verify_theorem2_symbolic(15), 16);
                  const auto sampled = verify_theorem2_sampled(40, default_sample_points());
                  report_ok(c, sampled, 41 * 5);
                  c(sampled.parameters["points_used"] == sampled.parameters["sample_points"],
                    "a sample point had to be moved");
              });

    criterion(6, "q-recurrence residual n <= 30, q -> 1 degeneration n <= 30, q-integer splitting |n|,|a| <= 10",
              [](Checker& c) {
                  report_ok(c, verify_b2r(30), 31);
                  report_ok(c, verify_qdegen(30), 31);
                  report_ok(c, verify_qint_split(10), 21 * 21);
              });

    criterion(7, "Euler 2 <= n <= 50, Dilcher N <= 7, N/2 < n <= 40, multinomial enumeration N <= 3, n <= 6",
              [](Checker& c) {
                  const BTable b = bernoulli_compute(80);
                  c(euler_lhs(b, 2) == Rational(1, 6) && euler_rhs(b, 2) == Rational(1, 6), "n = 2 instance");
                  report_ok(c, verify_euler(50), 49);
                  std::uint64_t cells = 0;
                  for (long N = 1; N <= 7; ++N) {
                      cells += static_cast<std::uint64_t>(40 - N / 2);
                  }
                  report_ok(c, verify_dilcher(7, 40), cells);
                  for (int N = 1; N <= 3; ++N) {
                      for (long n = 0; n <= 6; ++n) {
                          c(dilcher_lhs(b, N, n) == oracle::dilcher_multinomial(b.values(), N, n),
                            "enumeration at N=" + std::to_string(N) + " n=" + std::to_string(n));
                      }
                  }
              });

    criterion(8, "command-line exit codes, JSON round trip, cache round trip, corrupted table", [](Checker& c) {
        const auto dir = std::filesystem::temp_directory_path() / ("gregory-acceptance-" + std::to_string(getpid()));
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        const std::string cache = "--cache-dir '" + dir.string() + "/cache'";

        const auto csv = run_tool("compute b2 --max 5 --format csv --no-cache");
        c(csv.code == 0 && csv.out == "0,1/1\n1,1/2\n2,-1/12\n3,1/24\n4,-19/720\n5,3/160\n", "compute b2 csv");
        c(run_tool("compute b2 --max -1 --no-cache").code == 2, "negative bound");
        c(run_tool("compute qb2 --max 41 --no-cache").code == 2, "qb2 limit");
        c(run_tool("compute nothing --max 3").code == 2, "unknown sequence");
        c(run_tool("verify euler --n 1").code == 2, "euler n = 1");
        c(run_tool("verify thm1 --N 2 --n 10").code == 0, "verify thm1 passing");

        const auto latex = run_tool("compute atable --max 2 --format latex --no-cache");
        c(latex.code == 0 && latex.out.find("-(n-1)b_{n} - (n-2)b_{n-1}") != std::string::npos, "atable latex");

        const struct {
            const char* seq;
            int max;
            std::function<bool(const Json&)> same;
        } tables[] = {
            {"b2", 40, [](const Json& j) { return json::decode_b2(j) == b2_compute(40); }},
            {"bernoulli", 40, [](const Json& j) { return json::decode_bernoulli(j) == bernoulli_compute(40); }},
            {"qb2", 10, [](const Json& j) { return json::decode_qb2(j) == qb2_compute(10); }},
            {"atable", 8, [](const Json& j) { return json::decode_atable(j) == a_table_build(8); }},
            {"ctable", 8, [](const Json& j) { return json::decode_ctable(j) == c_table_build(8); }},
        };
        for (const auto& t : tables) {
            const std::string args = std::string("compute ") + t.seq + " --max " + std::to_string(t.max) + " ";
            const auto fresh = run_tool(args + cache);
            const auto cached = run_tool(args + cache);
            c(fresh.code == 0 && cached.code == 0, std::string(t.seq) + " exit code");
            c(fresh.out == cached.out, std::string(t.seq) + " cached output differs");
            c(t.same(Json::parse(fresh.out)), std::string(t.seq) + " JSON round trip");
            std::ifstream entry(dir / "cache" / (std::string(t.seq) + ".json"));
            c(entry.good() && t.same(Json::parse(entry).at("payload")), std::string(t.seq) + " cache entry");
        }

        std::vector<Rational> values = b2_compute(30).values();
        values[11] += Rational(1, 7);
        const auto table_file = dir / "perturbed.json";
        std::ofstream(table_file) << json::encode(B2Table(values)).dump();
        const auto bad = run_tool("verify thm1 --N 4 --n 30 --table '" + table_file.string() + "'");
        c(bad.code == 1, "perturbed table exit code " + std::to_string(bad.code));
        if (bad.code == 1) {
            const Json r = Json::parse(bad.out);
            c(r.at("passed") == false && r.at("first_failure").is_object() &&
                  r["first_failure"]["params"]["N"] == 2 && r["first_failure"]["params"]["n"] == 11,
              "first_failure not populated as expected");
        }
        std::filesystem::remove_all(dir);
    });

    return failures == 0 ? 0 : 1;
}
