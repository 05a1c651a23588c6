#ifndef HLPARSE_TESTS_RANDOM_TREES_H_
#define HLPARSE_TESTS_RANDOM_TREES_H_

#include <random>
#include <string>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse::testing {

// Uniformly random rooted labelled tree on tokens 1..n (Pruefer sequence
// plus a uniform root), attached to the virtual root. Labels drawn from
// `labels`; the root word gets "root".
DepTree RandomTree(int n, std::mt19937_64& rng, const std::vector<std::string>& labels);

// Random projective tree: recursive split of an interval.
DepTree RandomProjectiveTree(int n, std::mt19937_64& rng, const std::vector<std::string>& labels);

// Random non-empty ascending subset of 1..n.
std::vector<int> RandomSubset(int n, std::mt19937_64& rng);

const std::vector<std::string>& DefaultLabels();

}  // namespace hlparse::testing

#endif  // HLPARSE_TESTS_RANDOM_TREES_H_
