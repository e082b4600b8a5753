#ifndef MLC_GUARD_MLC_ERRORS_HH
#define MLC_GUARD_MLC_ERRORS_HH 1

#include <exception>
#include <string>

namespace mlc
{
    class Error : public std::exception
    {
        private:
            std::string _what;

        public:
            explicit Error(std::string what) : _what(std::move(what)) { }

            auto what() const noexcept -> const char * override
            {
                return _what.c_str();
            }
    };

    /// Thrown when a graph, labelling or clique fails a structural check.
    class GraphError : public Error
    {
        public:
            using Error::Error;
    };

    /// Bad caller-supplied argument (budget, label count, worker count, ...).
    class ArgumentError : public Error
    {
        public:
            using Error::Error;
    };

    /// Malformed input text. line() is 1-based, or 0 when the problem is not tied to one line.
    class ParseError : public Error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message) :
                Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
                _line(line)
            {
            }

            auto line() const noexcept -> int
            {
                return _line;
            }
    };
}

#endif
