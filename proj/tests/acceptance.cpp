// Acceptance run: one line per criterion. All comparisons are exact; the
// runtime budget of each criterion is part of its verdict.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eres/realization.hpp"
#include "eres/suites.hpp"

using namespace eres;

namespace {

AlgebraPresentation a1(int p) {
    return parse_presentation("field " + std::to_string(p) +
                              "\nalgebra commutative\ngenerator x 2\ngenerator y 4\nproduct x x = y\n");
}
AlgebraPresentation a2(int p) {
    return parse_presentation("field " + std::to_string(p) + "\nalgebra commutative\ngenerator x 1\n");
}
AlgebraPresentation a3(int p) {
    return parse_presentation("field " + std::to_string(p) + "\nalgebra free\ngenerator x 1\n");
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "  " << what << "\n";
        }
    }
    void report(const CheckReport& r, const std::string& what) {
        if (!r.ok()) need(false, what + "\n" + r.format());
    }
};

std::vector<int64_t> model_column(const HomologyReport& r) {
    std::vector<int64_t> out;
    for (auto& row : r.rows) out.push_back(row.model);
    return out;
}

std::string show(const std::vector<int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

void expect_homology(Outcome& o, const HomologyReport& r, const std::vector<int64_t>& want, const std::string& what) {
    o.need(r.ok(), what + ": model differs from target\n" + r.format());
    o.need(model_column(r) == want, what + ": H = " + show(model_column(r)) + ", expected " + show(want));
}

int dd_count(const AlgebraPresentation& p, int D) {
    AlgebraModel A(p, D);
    QuasiFreeModel M(A, OperadMode::E, D);
    return static_cast<int>(M.dd_failures().size());
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double budget;  // seconds
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all = {
        {1, "operad axioms, arity <= 4, degree <= 3, F2 and Q", 60,
         [](Outcome& o) {
             for (int p : {2, 0}) o.report(operad_axiom_suite(Field(p), 4, 3), "operad axioms");
         }},
        {2, "coaction on N(Delta^n), n <= 3, arity <= 3, degree <= 2, F2 and Q", 60,
         [](Outcome& o) {
             for (int p : {2, 0}) o.report(coaction_suite(Field(p), 3, 3, 2), "coaction");
         }},
        {3, "D^2 = 0: A1, A2 over F2 at D=8; A1 over Q at D=6", 300,
         [](Outcome& o) {
             o.need(dd_count(a1(2), 8) == 0, "A1 F2 D=8");
             o.need(dd_count(a2(2), 8) == 0, "A2 F2 D=8");
             o.need(dd_count(a1(0), 6) == 0, "A1 Q D=6");
         }},
        {4, "coend oracle: (A2, N=1, deg <= 3), (A1, N=2, deg <= 5), F2 and Q", 300,
         [](Outcome& o) {
             for (int p : {2, 0}) {
                 o.report(compare_model_coend(a2(p), 1, 3), "A2 N=1");
                 o.report(compare_model_coend(a1(p), 2, 5), "A1 N=2");
             }
         }},
        {5, "model homology at D=6: A2 -> H1=1; A1 -> H2=H4=1", 600,
         [](Outcome& o) {
             expect_homology(o, verify_resolution(a2(2), OperadMode::E, 6), {1, 0, 0, 0, 0}, "A2");
             expect_homology(o, verify_resolution(a1(2), OperadMode::E, 6), {0, 1, 0, 1, 0}, "A1");
         }},
        {6, "com mode: A1 over Q at D=6, and the pushforward of the E-model", 600,
         [](Outcome& o) {
             expect_homology(o, verify_resolution(a1(0), OperadMode::Com, 6), {0, 1, 0, 1, 0}, "A1 com");
             o.report(com_pushforward(a1(0), 6), "pushforward");
         }},
        {7, "free input A3 = E(x), D=5: H(model) = H(E(x)), F2 and Q", 300,
         [](Outcome& o) {
             expect_homology(o, verify_resolution(a3(2), OperadMode::E, 5), {1, 1, 2, 3}, "A3 F2");
             expect_homology(o, verify_resolution(a3(0), OperadMode::E, 5), {1, 0, 0, 0}, "A3 Q");
         }},
        {8, "latching split and generator preservation: A2, n <= 3, D=6", 60,
         [](Outcome& o) {
             for (int p : {2, 0}) {
                 auto pr = a2(p);
                 AlgebraModel A(pr, 6);
                 Resolution R(A);
                 o.report(simplicial_suite(R, 3, 6), "simplicial suite");
             }
         }},
        {9, "unitary identification: A2, n <= 3, D=4; A = 0 rejected", 60,
         [](Outcome& o) {
             o.report(unitize_check(a2(2), 3, 4), "unitize A2");
             bool rejected = false;
             try {
                 unitize_check(parse_presentation("field 2\nalgebra commutative\n"), 3, 4);
             } catch (const DegenerateInput&) {
                 rejected = true;
             }
             o.need(rejected, "A = 0 accepted");
         }},
        {10, "adjoint roundtrip on 24 samples over Delta^0..2, cosimplicial identities, F2 and Q", 60,
         [](Outcome& o) {
             for (int p : {2, 0}) o.report(framing_suite(Field(p), 24, 7), "framing suite");
         }},
    };

    int failed = 0;
    for (auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.need(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.need(secs <= c.budget, "runtime over budget");
        if (!o.ok) ++failed;
        std::cout << "criterion " << std::setw(2) << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << c.name << " ["
                  << std::fixed << std::setprecision(1) << secs << " s, budget " << c.budget << " s]\n"
                  << o.detail.str() << std::flush;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
