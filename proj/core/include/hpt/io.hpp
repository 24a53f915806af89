#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hpt/factory.hpp"

namespace hpt {

/**
 * Schema violation while reading an interchange document. location is a
 * '/'-joined path into the JSON tree, e.g. "/maps/mu/entries/3".
 */
class ParseError : public std::runtime_error {
public:
  ParseError(std::string location, const std::string& message);
  const std::string& location() const { return location_; }

private:
  std::string location_;
};

/*
 * The interchange document: one coefficient field, flat sections for spaces,
 * maps and vectors, and composite records that reference the flat sections
 * by label. Reading resolves every reference and checks every shape
 * (sources, targets, bidegrees), but no mathematical identity: a complex
 * whose d fails d.d = 0 parses fine and fails at verification or assembly.
 *
 * Space references in maps and vectors are a registered label, "label^k"
 * for the k-fold tensor power, or "s(label)" / "s(label)^k" for the
 * suspension shift (same basis names, degree lowered by one).
 */
struct ComplexRecord {
  std::string space;  // space reference
  std::string d;      // map label: space -> space, bidegree (1, 0)
};

struct DgaRecord {
  std::string complex;  // complex label
  std::string product;  // map label: space^2 -> space, bidegree (0, 0)
  std::string unit;     // vector label, homogeneous of bidegree (0, 0)
};

struct AinftyRecord {
  std::string complex;
  int max_arity = 1;
  // arity n >= 2 -> map label of bidegree (2 - n, 0); the arity-1 operation
  // is always the differential and is not stored
  std::map<int, std::string> operations;
};

struct SdrRecord {
  std::string big, small;   // complex labels
  std::string alpha, r, h;  // small -> big, big -> small, big -> big
};

struct BarMapRecord {
  std::string source, target;  // complex labels
  int source_arity = 1, target_arity = 1;
  int total_degree = 0;
  std::map<std::pair<int, int>, std::string> blocks;  // (j, k) -> map label
};

struct Document {
  Field field;
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, GradedMap> maps;
  std::map<std::string, Vec> vectors;
  std::map<std::string, ComplexRecord> complexes;
  std::map<std::string, DgaRecord> dgas;
  std::map<std::string, AinftyRecord> ainfty;
  std::map<std::string, SdrRecord> sdrs;
  std::map<std::string, BarMapRecord> barmaps;

  /** Resolve a space reference. Throws std::invalid_argument on a malformed
      reference or a dangling label. */
  SpacePtr resolve_space(const std::string& ref) const;
  const GradedMap& map_named(const std::string& label) const;   // std::out_of_range
  const Vec& vector_named(const std::string& label) const;      // std::out_of_range
};

/** Parse an interchange document. Throws ParseError on anything the schema
    rejects, including JSON syntax errors. */
Document read_document(const std::string& json_text);
Document read_document_file(const std::string& path);

/** Serialize deterministically: sorted labels, entries in basis order,
    two-space indent, trailing newline. Equal documents give equal bytes. */
std::string write_document(const Document& doc);
void write_document_file(const Document& doc, const std::string& path);

/*
 * Assembly: turn records into library values. Mathematical validation runs
 * here (make_complex checks d.d = 0, the A-infinity constructor checks its
 * shapes), so these throw std::invalid_argument on data that parses but
 * fails the identities its type demands, and std::out_of_range on unknown
 * labels. assemble_dga returns the product as stored; nothing has checked
 * Leibniz, associativity or unitality yet.
 */
Complex assemble_complex(const Document& doc, const std::string& label);
DgAlgebra assemble_dga(const Document& doc, const std::string& label);
SdrDatum assemble_sdr(const Document& doc, const std::string& label);
/** max_arity 0 means the record's stored arity. */
AInfinityStructure assemble_ainfty(const Document& doc, const std::string& label,
                                   int max_arity = 0);
BarMap assemble_barmap(const Document& doc, const std::string& label);

/*
 * Registration: add library values to a document, creating the flat entries
 * they need (complex "X" registers space "X" and map "X.d"). Composites
 * take the label of an already registered complex and check the value
 * actually lives on it. All throw std::invalid_argument on label
 * collisions, field mismatches, or endpoint spaces that no reference can
 * express; a failed call leaves the document unchanged.
 */
void put_space(Document& doc, const std::string& label, SpacePtr space);
void put_map(Document& doc, const std::string& label, GradedMap m);
void put_vector(Document& doc, const std::string& label, Vec v);
void put_complex(Document& doc, const std::string& label, const Complex& c);
void put_dga(Document& doc, const std::string& label, const DgAlgebra& a,
             const std::string& complex_label);
void put_sdr(Document& doc, const std::string& label, const SdrDatum& s,
             const std::string& big_label, const std::string& small_label);
void put_ainfty(Document& doc, const std::string& label, const AInfinityStructure& A,
                const std::string& complex_label);
void put_barmap(Document& doc, const std::string& label, const BarMap& f,
                const std::string& source_label, const std::string& target_label);

}  // namespace hpt
