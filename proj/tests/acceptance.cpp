// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ihg/suites.hpp"

namespace {

using ihg::Json;
using ihg::SuiteConfig;
using ihg::SuiteResult;

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> body;  // fills a one-line summary
};

SuiteResult suite(const std::string& check, int genus) {
  return ihg::run_suite(check, SuiteConfig{genus, 0, {}, {}, {}});
}

std::string count(const Json& j) { return j.dump(); }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"maximal-simplex", 10,
       [](std::string& note) {
         const SuiteResult g2 = suite("dims", 2), g3 = suite("dims", 3);
         note = "g=2: " + count(g2.details["simplex"]["vertices"]) + " vertices (5g-5 = 5), g=3: " +
                count(g3.details["simplex"]["vertices"]) + " vertices (5g-5 = 10)";
         return g2.verdict && g3.verdict;
       }},
      {"meridian-link-simplex", 30,
       [](std::string& note) {
         const SuiteResult g3 = suite("links", 3), g4 = suite("links", 4);
         note = "g=3: " + count(g3.details["simplex"]["vertices"]) + " vertices, " +
                count(g3.details["compressible_pants"]) + " compressible pants; g=4: " +
                count(g4.details["simplex"]["vertices"]) + " vertices, " +
                count(g4.details["compressible_pants"]) + " compressible pants";
         return g3.verdict && g4.verdict;
       }},
      {"clique-bound", 300,
       [](std::string& note) {
         const SuiteResult g2 = suite("clique", 2), g3 = suite("clique", 3);
         note = "g=2: clique " + count(g2.details["max_clique"]) + " on " +
                count(g2.details["graph"]["curve_vertices"]) + " curve vertices; g=3: clique " +
                count(g3.details["max_clique"]) + " on " + count(g3.details["graph"]["curve_vertices"]) +
                " curve vertices";
         return g2.verdict && g3.verdict;
       }},
      {"twist-intersection-identity", 60,
       [](std::string& note) {
         bool ok = true;
         for (int g : {2, 3}) {
           const Json d = suite("kernel", g).details["twist_intersection"];
           note += "g=" + std::to_string(g) + ": " + count(d["passed"]) + "/" + count(d["cases"]) + " ";
           ok = ok && d["failures"].empty() && d["passed"] == d["cases"];
         }
         return ok;
       }},
      {"homology-and-abelianization", 60,
       [](std::string& note) {
         bool ok = true;
         for (int g : {2, 3}) {
           const Json d = suite("kernel", g).details["pool_pairs"];
           note += "g=" + std::to_string(g) + ": " + count(d["homology_formula"]) + "/" + count(d["pairs"]) +
                   " formula, " + count(d["abelianization"]) + " abelianization, " + count(d["inverse_twist"]) +
                   " inverse; ";
           ok = ok && d["failures"].empty() && d["pairs"].get<int>() >= 100;
         }
         return ok;
       }},
      {"path-projection", 60,
       [](std::string& note) {
         bool ok = true;
         for (int g : {2, 3}) {
           const SuiteResult r = suite("projection", g);
           note += "g=" + std::to_string(g) + ": " + count(r.details["valid_projections"]) + "/" +
                   count(r.details["paths"]) + " valid; ";
           ok = ok && r.verdict && r.details["paths"].get<int>() >= 100;
         }
         return ok;
       }},
      {"coboundedness", 300,
       [](std::string& note) {
         bool ok = true;
         for (int g : {2, 3}) {
           const SuiteResult r = suite("cobounded", g);
           note += "g=" + std::to_string(g) + ": " + count(r.details["pants_checked"]) + " pants, " +
                   std::to_string(r.details["violations"].size()) + " violations; ";
           ok = ok && r.verdict;
         }
         return ok;
       }},
      {"link-shapes", 300,
       [](std::string& note) {
         const SuiteResult cone = suite("cone", 2), star = suite("star", 2);
         note = "cone " + count(cone.details["passed"]) + "/" + count(cone.details["checked"]) +
                ", star full coverage " + count(star.details["full_coverage"]) + "/" +
                count(star.details["checked"]) + " on " + count(star.details["graph"]["curve_vertices"]) +
                " curves";
         return cone.verdict && star.verdict && cone.details["checked"].get<int>() >= 20 &&
                star.details["checked"].get<int>() >= 10;
       }},
      {"twin-pants-witness", 120,
       [](std::string& note) {
         const SuiteResult r = suite("r5", 2);
         note = "words " + r.details["alpha"]["handlebody_word"].dump() + ", " +
                r.details["beta"]["handlebody_word"].dump() + "; regions " +
                count(r.details["first"]["region"]) + " and " + count(r.details["second"]["region"]);
         return r.verdict;
       }},
      {"hyperelliptic-involution", 300,
       [](std::string& note) {
         const SuiteResult r = suite("involution", 2);
         for (const Json& c : r.details["candidates"]) {
           note += c["name"].get<std::string>() + ": " + count(c["curves_fixed"]) + "/" +
                   count(c["curves_checked"]) + " fixed, pair " + c["pants_pair"].get<std::string>() + "; ";
         }
         note += "accepted " + r.details["accepted"].get<std::string>();
         return r.verdict;
       }},
      {"delta-estimation", 300,
       [](std::string& note) {
         bool ok = true;
         for (int g : {2, 3}) {
           const SuiteResult r = suite("delta", g);
           if (g == 2) {
             note = "tree " + r.details["tree_fixture"]["delta"].get<std::string>() + ", 6-cycle " +
                    r.details["cycle_fixture"]["delta"].get<std::string>() + "; ";
           }
           note += "g=" + std::to_string(g) + " pool " + r.details["pool_graph"]["delta"].get<std::string>() + "; ";
           ok = ok && r.verdict;
         }
         return ok;
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string note;
    bool verdict = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      verdict = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = verdict && in_time;
    failed += !pass;
    std::printf("%s  %-28s %7.2fs (limit %.0fs)  %s%s\n", pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                c.limit_seconds, note.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
