#pragma once
// File formats: categories, functors, chains and negative cyclic chains as
// versioned JSON documents with exact coefficient strings (see
// Scalar::parse). Loading is strict: unknown keys are rejected and every
// referenced label must be declared. Serialization is deterministic, so a
// save/load round trip reproduces the file byte for byte.

#include "nchodge/category.hpp"
#include "nchodge/cyclic.hpp"
#include "nchodge/functor.hpp"
#include "nchodge/hochschild.hpp"

#include <string>
#include <vector>

namespace nchodge {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

AInfCategory category_from_json(const std::string& text);
std::string category_to_json(const AInfCategory& C);
AInfCategory load_category(const std::string& path);
void save_category(const AInfCategory& C, const std::string& path);

// The functor file references basis labels of the already-loaded source and
// target categories.
AInfFunctor functor_from_json(const std::string& text, const AInfCategory& C,
                              const AInfCategory& D);
std::string functor_to_json(const AInfCategory& C, const AInfCategory& D,
                            const AInfFunctor& Fn);
AInfFunctor load_functor(const std::string& path, const AInfCategory& C,
                         const AInfCategory& D);

std::vector<Chain> chains_from_json(const std::string& text, const AInfCategory& C);
std::string chains_to_json(const AInfCategory& C, const std::vector<Chain>& chains);
std::vector<Chain> load_chains(const std::string& path, const AInfCategory& C);

// Cycle files carry u-power strata; parts beyond the requested truncation
// order are an error.
std::vector<NegCyclicChain> cycles_from_json(const std::string& text,
                                             const AInfCategory& C, int order);
std::string cycles_to_json(const AInfCategory& C,
                           const std::vector<NegCyclicChain>& cycles);
std::vector<NegCyclicChain> load_cycles(const std::string& path,
                                        const AInfCategory& C, int order);

} // namespace nchodge
