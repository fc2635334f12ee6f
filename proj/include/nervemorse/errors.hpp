#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nervemorse {

// Base class for all errors raised by this library. Payload fields on the
// derived types are pre-rendered strings so that callers (CLI, tests) can
// report them without pulling in the domain headers.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input / file format ---------------------------------------------------

struct ParseError : Error {
    ParseError(std::string origin_, int line_, const std::string& what_)
        : Error(origin_ + (line_ > 0 ? ":" + std::to_string(line_) : "") + ": " + what_),
          origin(std::move(origin_)), line(line_) {}
    std::string origin;
    int line;  // 1-based; 0 if not line-addressable (e.g. JSON byte offsets)
};

struct MalformedToken : Error {
    explicit MalformedToken(const std::string& token)
        : Error("malformed vertex token: \"" + token + "\""), token(token) {}
    std::string token;
};

// --- complex operations -----------------------------------------------------

struct VertexNotFound : Error {
    explicit VertexNotFound(const std::string& label)
        : Error("vertex not in complex: " + label), label(label) {}
    std::string label;
};

struct NotACone : Error {
    explicit NotACone(const std::string& label)
        : Error("vertex is not a cone apex: " + label), label(label) {}
    std::string label;
};

// --- covers and posets --------------------------------------------------------

struct UnionMismatch : Error {
    explicit UnionMismatch(std::vector<std::string> missing_facets_)
        : Error("cover members do not cover the ambient complex; " +
                std::to_string(missing_facets_.size()) + " facet(s) missing"),
          missing_facets(std::move(missing_facets_)) {}
    std::vector<std::string> missing_facets;  // rendered facets of the ambient not covered
};

struct NotASubcomplex : Error {
    NotASubcomplex(const std::string& member, const std::string& witness)
        : Error("cover member " + member + " is not a subcomplex of the ambient complex; offending facet " + witness),
          member(member), witness(witness) {}
    std::string member;
    std::string witness;
};

struct UnknownPosetElement : Error {
    explicit UnknownPosetElement(const std::string& id)
        : Error("no poset element with id " + id), id(id) {}
    std::string id;
};

// --- Morse matchings ----------------------------------------------------------

struct NotAFace : Error {
    explicit NotAFace(const std::string& face)
        : Error("matching references a non-cell: " + face), face(face) {}
    std::string face;
};

struct NotCodimensionOne : Error {
    NotCodimensionOne(const std::string& cell, const std::string& coface)
        : Error("matched pair is not a codimension-1 incidence: " + cell + " -> " + coface),
          cell(cell), coface(coface) {}
    std::string cell;
    std::string coface;
};

struct DoublyMatched : Error {
    explicit DoublyMatched(const std::string& cell)
        : Error("cell occurs in two matched pairs: " + cell), cell(cell) {}
    std::string cell;
};

struct CyclicMatching : Error {
    // witness alternates cell, coface, cell, ..., ending where it started
    explicit CyclicMatching(std::vector<std::string> witness_)
        : Error("matching is not acyclic; closed V-path of " +
                std::to_string(witness_.size() / 2) + " pair(s) found"),
          witness(std::move(witness_)) {}
    std::vector<std::string> witness;
};

struct BadInitial : Error {
    explicit BadInitial(const std::string& face)
        : Error("designated initial cell is not a critical vertex: " + face), face(face) {}
    std::string face;
};

// --- gluing pipeline ----------------------------------------------------------

struct MissingAssignment : Error {
    explicit MissingAssignment(std::vector<std::string> ids_)
        : Error("no Morse matching assigned to " + std::to_string(ids_.size()) +
                " poset element(s), first: " + (ids_.empty() ? "?" : ids_.front())),
          ids(std::move(ids_)) {}
    std::vector<std::string> ids;
};

}  // namespace nervemorse
