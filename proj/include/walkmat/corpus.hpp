#ifndef WALKMAT_CORPUS_HPP
#define WALKMAT_CORPUS_HPP

#include <vector>

#include "walkmat/graph.hpp"

namespace walkmat {

/* Every isomorphism class of graphs on exactly n vertices, one canonical
   representative each, sorted by certificate. Built level by level: each
   (n-1)-vertex graph is extended with a new vertex joined to every possible
   neighbor subset, deduplicating by certificate. Intended for n <= 8
   (1, 2, 4, 11, 34, 156, 1044, 12346 graphs); the census proper still takes
   its corpus from a file. */
std::vector<Graph> enumerate_graphs(int n);

} // namespace walkmat

#endif
