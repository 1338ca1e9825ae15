#pragma once

#include <stdexcept>
#include <string>

namespace staudt {

// Violated mathematical precondition: CLI exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Unparseable input text: CLI exit code 2, like any other usage error.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Declared resource budget exceeded (quantifier enumeration, retries): CLI exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace staudt
