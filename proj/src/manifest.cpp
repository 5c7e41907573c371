#include "ogring/suites.hpp"

#include <algorithm>
#include <set>

namespace ogring {

// One row per verified statement; "8" rows are the n = 8 analogues that
// replace their "16+" counterparts at that size.
const std::vector<ManifestEntry>& paper_statement_manifest() {
    static const std::vector<ManifestEntry> table = {
        {"dfn:KOG", "appendix_pieri", "any"},
        {"koggreaterorless", "appendix_pieri", "any"},
        {"ex:KOGT", "appendix_pieri", "any"},
        {"pieriformulaktheory", "appendix_pieri", "any"},
        {"ktheorysquaresbarek", "appendix_pieri", "any"},
        {"ktheoryproductsbarek", "appendix_pieri", "any"},
        {"ktheorysquaresckcommas", "appendix_pieri", "any"},
        {"ktheoryproductsckcommas", "appendix_pieri", "any"},
        {"ktheorycommasckproducts", "appendix_pieri", "any"},
        {"ktheorysquaresckproducts", "appendix_pieri", "any"},

        {"krelationinbar", "rees", "any"},
        {"krelationinbarlargeimodsquare", "rees", "any"},
        {"krelationinbarmodi", "rees", "any"},
        {"eq:gikigicki", "rees", "any"},
        {"lemK:eij.K", "rees", "any"},
        {"lemK:eijIthree", "rees", "any"},
        {"lemK:eonenj.K", "rees", "any"},
        {"propK:eoneeIthree.K", "rees", "any"},
        {"cor:fonepower", "rees", "any"},
        {"lemK:ijmultisubsetnew.K", "rees", "any"},
        {"lemK:indXplus1", "rees", "16+"},
        {"lemK:indXplus1n8", "rees", "8"},

        {"relationinbar", "chow", "any"},
        {"lemK:eij.CH", "chow", "any"},
        {"lemK:eonenj.CH", "chow", "any"},
        {"propK:eoneeIthree.CH", "chow", "any"},
        {"lem:eonepower", "chow", "any"},
        {"lemK:ijmultisubsetnew.CH", "chow", "any"},
        {"lem:indXplus1", "chow", "16+"},
        {"lem:indXplus1n8", "chow", "8"},
        {"lem:eonenjtorsioncor", "chow", "any"},
        {"eq:rescitwoe", "chow", "any"},
        {"eq:steenrodshortenedformula", "chow", "any"},
        {"eq:shat23", "chow", "any"},
        {"torsionindex", "chow", "any"},

        {"eq:setJcases", "main_theorem", "any"},
        {"eq:sizeofJset", "main_theorem", "any"},
        {"eq:elementx", "main_theorem", "any"},
        {"Kpl", "main_theorem", "any"},
        {"prop:GK", "main_theorem", "any"},
        {"eq:ybiga2", "main_theorem", "any"},
        {"eq:y2mminusone", "main_theorem", "any"},
        {"eq:twoindextindex", "main_theorem", "any"},
        {"rem:proofKpart", "main_theorem", "any"},
        {"mainthm", "main_theorem", "any"},
        {"prop:chow", "main_theorem", "any"},
    };
    return table;
}

bool manifest_applies(const ManifestEntry& entry, int n) {
    if (entry.n_selector == "any") return true;
    if (entry.n_selector == "8") return n == 8;
    if (entry.n_selector == "16+") return n >= 16;
    return false;
}

void add_manifest_check(CheckRunner& runner, const std::string& suite, int n,
                        const std::vector<std::string>& statement_ids) {
    runner.add("manifest.coverage", "artifact: statement-to-suite assignment",
               [suite, n, statement_ids]() -> std::pair<bool, Json> {
                   std::set<std::string> covered(statement_ids.begin(), statement_ids.end());
                   std::set<std::string> expected;
                   for (const auto& entry : paper_statement_manifest())
                       if (entry.suite == suite && manifest_applies(entry, n))
                           expected.insert(entry.statement);
                   Json w;
                   w["covered"] = std::vector<std::string>(covered.begin(), covered.end());
                   bool ok = covered == expected;
                   if (!ok) w["expected"] = std::vector<std::string>(expected.begin(), expected.end());
                   return {ok, w};
               });
}

}  // namespace ogring
