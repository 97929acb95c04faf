#ifndef VXK_TABULATE_HPP
#define VXK_TABULATE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace vxk {

// Rectangular numeric table destined for CSV/JSON output.  Numbers are
// written with %.17g so identical sweeps produce byte-identical files.
struct TabulatedSweep {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;
    // emitted as commented header lines (CSV) or a "metadata" object (JSON)
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_row(std::vector<double> row);
};

std::string format_double(double v);  // %.17g

void write_csv(std::ostream& os, const TabulatedSweep& sweep);
void write_json(std::ostream& os, const TabulatedSweep& sweep);

}  // namespace vxk

#endif
