// Acceptance suite: one criterion per line, exact checks throughout.
// Exit code is the number of failed criteria (0 on full pass).
//
// The CLI contract criterion drives the installed binary as a
// subprocess; its path is baked in at configure time.

#include <dnamat/dnamat.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "golden_matrices.hpp"

using namespace dnamat;

namespace {

// ---- subprocess helper ----

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + DNAMAT_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CommandResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// ---- independent oracles and generators ----

Rational det_cofactor(const RatMatrix& m) {
    const int n = m.order();
    if (n == 1) return m(1, 1);
    Rational acc;
    for (int j = 1; j <= n; ++j) {
        if (m(1, j).is_zero()) continue;
        RatMatrix minor(n - 1);
        for (int r = 2; r <= n; ++r) {
            int cc = 1;
            for (int c = 1; c <= n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const Rational term = m(1, j) * det_cofactor(minor);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc;
}

Rational random_rational(std::mt19937& rng, long bound = 12) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

RatMatrix random_matrix(std::mt19937& rng, int order) {
    RatMatrix m(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j) m(i, j) = random_rational(rng);
    return m;
}

RatMatrix random_centrosymmetric(std::mt19937& rng, int order) {
    RatMatrix m(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j) {
            const int mi = order + 1 - i, mj = order + 1 - j;
            if (std::pair(i, j) <= std::pair(mi, mj))
                m(i, j) = random_rational(rng);
            else
                m(i, j) = m(mi, mj);
        }
    return m;
}

// ---- criterion runner ----

int g_failures = 0;
int g_index = 0;

void criterion(const std::string& label, const std::function<bool(std::string&)>& body) {
    ++g_index;
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++g_failures;
    std::printf("%s  criterion %2d: %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", g_index,
                label.c_str(), secs, detail.empty() ? "" : "  -- ", detail.c_str());
}

// Reference determinants for degrees 1..10 at (5/4, 3/4). Every value
// is pinned by exact recomputation over two in-repo elimination paths
// plus an out-of-repo fraction-arithmetic oracle; the odd-degree signs
// alternate (-, +, -, +, -).
const std::vector<std::string> kReferenceDets = {
    "-1/2", "0", "49/16", "0", "-47089/512", "0", "759498481/65536", "0",
    "-198321002857201/33554432", "0"};

}  // namespace

int main() {
    criterion("determinants of degrees 1..10 at (5/4, 3/4), exact", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const HyperbolaPoint pt = hyperbola_point(Rational(2));
        if (pt.alpha() != Rational(5, 4) || pt.beta() != Rational(3, 4)) {
            detail = "wrong evaluation point";
            return false;
        }
        for (int n = 1; n <= 10; ++n) {
            const Rational det = det_bareiss(eval_matrix(build_dna(n), pt));
            if (det.to_string() != kReferenceDets[n - 1]) {
                detail = "degree " + std::to_string(n) + ": got " + det.to_string() +
                         ", expected " + kReferenceDets[n - 1];
                return false;
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 5.0) {
            detail = "exceeded the 5 second budget";
            return false;
        }
        return true;
    });

    criterion("golden matrices of orders 2..7, symbolic equality", [](std::string& detail) {
        for (size_t k = 0; k < golden::kFamily.size(); ++k) {
            const int n = static_cast<int>(k) + 1;
            const PolyMatrix m = build_dna(n);
            const auto& rows = *golden::kFamily[k];
            for (int i = 1; i <= m.order(); ++i)
                for (int j = 1; j <= m.order(); ++j) {
                    if (m(i, j).to_string() != rows[i - 1][j - 1] ||
                        m(i, j) != BiPoly::parse(rows[i - 1][j - 1])) {
                        detail = "n=" + std::to_string(n) + " entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + "): built " + m(i, j).to_string() +
                                 ", fixture " + rows[i - 1][j - 1];
                        return false;
                    }
                }
        }
        return true;
    });

    criterion("invariance-expansion oracle equals the builder, n <= 20", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        for (int n = 0; n <= 20; ++n) {
            const PolyMatrix built = build_dna(n);
            const PolyMatrix oracle = build_oracle(n);
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j <= n + 1; ++j)
                    if (built(i, j) != oracle(i, j)) {
                        detail = "n=" + std::to_string(n) + ", entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")";
                        return false;
                    }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 60.0) {
            detail = "exceeded the 60 second budget";
            return false;
        }
        return true;
    });

    criterion("centrosymmetry of the symbolic family, n <= 32", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        for (int n = 0; n <= 32; ++n)
            if (!is_centrosymmetric(build_dna(n))) {
                detail = "n=" + std::to_string(n);
                return false;
            }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 60.0) {
            detail = "exceeded the 60 second budget";
            return false;
        }
        return true;
    });

    criterion("column sums equal (a+b)^n - 1, n <= 32", [](std::string& detail) {
        const BiPoly a_plus_b = BiPoly::parse("a + b");
        for (int n = 0; n <= 32; ++n) {
            const PolyMatrix m = build_dna(n);
            const BiPoly expected = pow(a_plus_b, n) - BiPoly::constant(1);
            for (int col = 1; col <= n + 1; ++col)
                if (column_sum(m, col) != expected) {
                    detail = "n=" + std::to_string(n) + ", column " + std::to_string(col);
                    return false;
                }
        }
        return true;
    });

    criterion("p-fold convolution identity, n <= 40, k in [-2, n+2], p in [0, n]",
              [](std::string& detail) {
                  for (long n = 0; n <= 40; ++n)
                      for (long k = -2; k <= n + 2; ++k)
                          for (long p = 0; p <= n; ++p)
                              if (p_stifel_rhs(n, k, p) != binomial(n, k)) {
                                  detail = "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                           ", p=" + std::to_string(p);
                                  return false;
                              }
                  return true;
              });

    criterion("alternating diagonal sum is -1 iff i = j, j <= 40, i <= 45",
              [](std::string& detail) {
                  for (long j = 1; j <= 40; ++j)
                      for (long i = 0; i <= 45; ++i) {
                          const Int expected = i == j ? Int(-1) : Int(0);
                          if (alternating_diag_sum(j, i) != expected) {
                              detail = "j=" + std::to_string(j) + ", i=" + std::to_string(i) +
                                       ": " + to_string(alternating_diag_sum(j, i));
                              return false;
                          }
                      }
                  return true;
              });

    criterion("determinant parity and kernel at t in {2, 3, 5/2, 7/3}, n <= 16",
              [](std::string& detail) {
                  const std::vector<HyperbolaPoint> points = {
                      hyperbola_point(Rational(2)), hyperbola_point(Rational(3)),
                      hyperbola_point(Rational(5, 2)), hyperbola_point(Rational(7, 3))};
                  const ParityReport report = verify_parity(16, points);
                  if (!report.all_pass) detail = report.first_failure;
                  return report.all_pass;
              });

    criterion("A_n times the binomial vector reduces to zero, even n <= 24",
              [](std::string& detail) {
                  for (int n = 2; n <= 24; n += 2)
                      for (const HyperbolaReduced& component : symbolic_null_check(n))
                          if (!component.is_zero()) {
                              detail = "n=" + std::to_string(n);
                              return false;
                          }
                  return true;
              });

    criterion("determinant cross-paths: centro vs bareiss vs cofactor",
              [](std::string& detail) {
                  for (int n = 0; n <= 15; ++n)
                      for (const Rational& t :
                           {Rational(2), Rational(3), Rational(5, 2)}) {
                          const RatMatrix m =
                              eval_matrix(build_dna(n), hyperbola_point(t));
                          if (det_centro(m) != det_bareiss(m)) {
                              detail = "family n=" + std::to_string(n) + " at t=" + t.to_string();
                              return false;
                          }
                      }
                  std::mt19937 rng(987654);
                  std::uniform_int_distribution<int> order(2, 16);
                  for (int trial = 0; trial < 50; ++trial) {
                      const RatMatrix m = random_centrosymmetric(rng, order(rng));
                      if (det_centro(m) != det_bareiss(m)) {
                          detail = "random centrosymmetric, trial " + std::to_string(trial);
                          return false;
                      }
                  }
                  std::uniform_int_distribution<int> small(1, 6);
                  for (int trial = 0; trial < 100; ++trial) {
                      const RatMatrix m = random_matrix(rng, small(rng));
                      if (det_bareiss(m) != det_cofactor(m)) {
                          detail = "cofactor mismatch, trial " + std::to_string(trial);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("CLI contract: verify exits 0, json round-trips, mutations exit nonzero",
              [](std::string& detail) {
                  const CommandResult verify = run_cli("verify --max-n 12");
                  if (verify.exit_code != 0) {
                      detail = "verify --max-n 12 exited " + std::to_string(verify.exit_code);
                      return false;
                  }

                  // round trip of library emissions, symbolic and evaluated
                  for (int n = 0; n <= 8; ++n) {
                      const PolyMatrix sym = build_dna(n);
                      if (poly_matrix_from_json(matrix_to_json(sym)) != sym) {
                          detail = "symbolic round trip, n=" + std::to_string(n);
                          return false;
                      }
                      const HyperbolaPoint pt = hyperbola_point(Rational(5, 2));
                      const RatMatrix m = eval_matrix(sym, pt);
                      const auto parsed = rat_matrix_from_json(
                          matrix_to_json(m, EvalPoint{pt.alpha(), pt.beta()}));
                      if (parsed.matrix != m) {
                          detail = "evaluated round trip, n=" + std::to_string(n);
                          return false;
                      }
                  }

                  // round trip of actual CLI output
                  const CommandResult sym_doc = run_cli("build --n 3 --format json");
                  if (sym_doc.exit_code != 0 ||
                      poly_matrix_from_json(nlohmann::json::parse(sym_doc.output)) !=
                          build_dna(3)) {
                      detail = "CLI symbolic json mismatch";
                      return false;
                  }
                  const CommandResult eval_doc = run_cli("build --n 2 --t 2 --format json");
                  const RatMatrix expected =
                      eval_matrix(build_dna(2), hyperbola_point(Rational(2)));
                  if (eval_doc.exit_code != 0 ||
                      rat_matrix_from_json(nlohmann::json::parse(eval_doc.output)).matrix !=
                          expected) {
                      detail = "CLI evaluated json mismatch";
                      return false;
                  }

                  for (EntryMutation mutation : all_mutations()) {
                      const CommandResult mutated = run_cli(
                          "verify --max-n 6 --mutate " + mutation_name(mutation));
                      if (mutated.exit_code == 0) {
                          detail = "mutation " + mutation_name(mutation) + " was not caught";
                          return false;
                      }
                  }

                  // stable exit-code contract: usage errors are 2
                  const CommandResult usage = run_cli("det --n 3");
                  if (usage.exit_code != 2) {
                      detail = "usage error exited " + std::to_string(usage.exit_code) +
                               ", expected 2";
                      return false;
                  }
                  return true;
              });

    if (g_failures == 0)
        std::printf("all %d acceptance criteria passed\n", g_index);
    else
        std::printf("%d of %d acceptance criteria FAILED\n", g_failures, g_index);
    return g_failures == 0 ? 0 : 1;
}
