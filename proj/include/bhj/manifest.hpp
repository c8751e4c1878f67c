#pragma once

#include "bhj/operators.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bhj {

/// Resolved set of named domain objects loaded from manifest files.
/// References (representation -> algebra, operator -> representation) are
/// resolved by name across the whole provided file set.
struct ObjectGraph {
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, std::shared_ptr<const BiHomPreJordanSuperalgebra>> pre_jordans;
    std::map<std::string, std::shared_ptr<const Bimodule>> bimodules;
    std::map<std::string, RepresentationPtr> representations;
    std::map<std::string, std::shared_ptr<const OOperator>> operators;
    std::map<std::string, std::shared_ptr<const GradedMap>> maps;

    /// (kind, name) in file/encounter order; used for positional selection.
    std::vector<std::pair<std::string, std::string>> order;

    /// name -> digest of the canonical serialization, for audit headers.
    std::map<std::string, std::string> digests;

    std::vector<std::string> names_of_kind(const std::string& kind) const;
};

/// Parses and resolves a set of manifest files. A file holds one manifest
/// object or an array of them. Exact duplicates (same name, same canonical
/// form) may appear across files; conflicting ones are an error.
ObjectGraph load_manifests(const std::vector<std::string>& paths);

/// Like load_manifests but from in-memory documents ("path" only labels
/// error messages).
ObjectGraph load_manifest_texts(const std::vector<std::pair<std::string, std::string>>& docs);

// Canonical JSON forms. Layout spaces (direct sums) are reindexed to the
// canonical even-first order on save, transporting all data along the
// permutation, so every saved manifest has a plain (even, odd) space.
nlohmann::json algebra_to_json(const std::string& name, const BiHomJordanSuperalgebra& J);
nlohmann::json pre_jordan_to_json(const std::string& name,
                                  const BiHomPreJordanSuperalgebra& P);
nlohmann::json bimodule_to_json(const std::string& name, const std::string& algebra_name,
                                const Bimodule& B);
nlohmann::json representation_to_json(const std::string& name,
                                      const std::string& algebra_name,
                                      const Representation& R);
nlohmann::json o_operator_to_json(const std::string& name, const std::string& rep_name,
                                  const OOperator& op);
nlohmann::json map_to_json(const std::string& name, const GradedMap& f);

/// One manifest object or a dependency-ordered array, rendered with sorted
/// keys, two-space indentation and a trailing newline. This rendering is the
/// byte-exact canonical file format.
std::string render_manifest_file(const std::vector<nlohmann::json>& manifests);

/// FNV-1a 64-bit digest, hex encoded.
std::string fnv1a64_hex(const std::string& bytes);

} // namespace bhj
