// The shipped one-parameter identity corpus, embedded so the corpus and
// selfcheck commands need no filesystem setup. Every entry is a .qid text.
#pragma once

#include <string>
#include <vector>

namespace qminor {

struct CorpusEntry {
    std::string name;
    std::string text;
};

// Defining relations of M_q at n = 2, 3 written as 1x1-minor identities, the
// 2x2 Laplace expansion, the 3x3 first-row Laplace expansion, and the 2x2
// determinant centrality family.
const std::vector<CorpusEntry>& builtin_corpus();

const CorpusEntry* find_corpus_entry(const std::string& name);

}  // namespace qminor
