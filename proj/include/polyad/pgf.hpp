#pragma once

#include <string>
#include <vector>

#include "polyad/constructions.hpp"

namespace polyad {

// Line-oriented group file. save(load(text)) == text for any text produced by save.
std::string save_pgf(const NaryGroup& g);
std::string save_pgf(const Recipe& r);

// Builds and checks the group. Throws ParseError on malformed input and the construction
// errors (NotCentral, NotAssociative, ...) on invalid payloads.
NaryGroup load_pgf(const std::string& text, NaryGroup::Check check = NaryGroup::Check::Full);
// Parses without the n-ary group check for table documents.
Groupoid load_pgf_groupoid(const std::string& text);

// Binary or n-ary table document with free-form comment lines after the header comment.
std::string table_pgf(std::size_t k, int n, const std::vector<Elem>& table, const std::vector<std::string>& labels,
                      const std::vector<std::string>& comments = {});

std::string quote(const std::string& s);

}  // namespace polyad
