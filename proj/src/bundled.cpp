#include "patmine/bundled.hpp"

#include "patmine/errors.hpp"

#include <sstream>

namespace patmine::bundled {

namespace {

const char kTableS2[] =
    R"(domain_no,domain,n_patents,prevent,undesirable,requirement,fail,disadvantage,overcome,six_kw_total,word_total,kw_per_100k,k_percent
1,3DPrinting,100,47,14,31,11,45,14,162,172952,94,38
2,Aircraft,100,88,14,81,99,48,24,354,131060,270,12
3,Batteries,100,75,8,48,28,18,15,192,111825,172,7
4,Camera Sensitivity,99,58,3,34,3,25,19,142,129106,110,16
5,Capacitor,100,54,23,30,25,32,16,180,117888,153,15
6,Combustion,99,69,12,23,41,22,22,189,112038,169,6
7,CT scan,100,31,16,21,14,32,23,137,151289,91,37
8,Electric Power Transmission,100,42,15,48,28,32,13,178,115704,154,15
9,Electric motor,99,66,20,29,13,42,21,191,95661,200,3
10,Electric Telcom,100,88,9,36,25,26,16,200,102817,195,10
11,Electronic Computation,99,33,0,58,62,19,9,181,146260,124,33
12,Flywheel,100,48,11,39,80,54,23,255,107438,237,9
13,FuelCell,99,108,14,73,11,28,17,251,146123,172,14
14,Genome sequencing,99,42,2,16,7,21,13,101,191484,53,29
15,Incandescent Lighting,100,63,15,21,62,42,14,217,109610,198,5
16,LED,100,53,7,12,16,29,17,134,119257,112,36
17,Magnetic storage,99,64,7,43,17,26,29,186,139223,134,32
18,Milling Machine,97,89,16,28,22,37,28,220,103482,213,3
19,MRI,98,21,14,24,17,58,20,154,138033,112,48
20,Optical Storage,99,72,3,19,34,31,9,168,152731,110,27
21,Optical Telcom,99,40,7,31,6,23,22,129,106801,121,65
22,Photolithography,98,33,27,31,11,13,14,129,139494,92,24
23,Semiconductor storage,97,41,7,28,30,47,21,174,132235,132,43
24,SolarPV,98,59,11,42,25,22,13,172,128842,133,10
25,Superconductors,100,41,14,20,11,15,19,120,109385,110,10
26,Wind,99,39,8,31,29,34,29,170,129593,131,9
27,WirelessTelcom,99,52,8,60,19,33,29,201,147087,137,50
28,Integrated Circuits (IC),99,44,11,54,13,37,14,173,110844,156,36
)";

const char kTableS3[] =
    R"(keyword,root,status,reason,mean,Batteries,Wind,PV,Capacitors,CT scan
parasitic,parasit,culled,low-cross-domain-usage,0.97,0.99,/,0.99,0.94,/
problem,problem,culled,low-relevancy,0.58,0.68,0.61,0.55,0.5,0.55
prevent,prevent,active,,0.83,0.93,0.85,0.76,0.85,0.75
undesirable,undesir,active,,0.94,0.88,0.95,0.99,0.99,0.875
requirement,requirement,active,,0.75,0.85,0.69,0.79,0.81,0.63
fail,fail,active,,0.72,0.92,0.68,0.78,0.74,0.5
disadvantage,disadvantag,active,,0.81,0.93,0.8,0.79,0.8,0.71
overcome,overcom,active,,0.98,0.99,0.96,0.99,0.95,0.99
)";

const char kStopwords[] =
    R"(# patmine stopword list, version: 1
a
about
above
after
again
against
all
also
am
an
and
any
are
as
at
be
because
been
before
being
below
between
both
but
by
can
cannot
could
did
do
does
doing
down
during
each
either
few
for
from
further
had
has
have
having
he
her
here
hers
herself
him
himself
his
how
i
if
in
into
is
it
its
itself
just
may
me
might
more
most
much
must
my
myself
neither
no
nor
not
now
of
off
on
once
only
onto
or
other
our
ours
ourselves
out
over
own
said
same
shall
she
should
so
some
such
than
that
the
their
theirs
them
themselves
then
there
thereby
therefore
these
they
this
those
through
thus
to
too
under
until
up
upon
very
was
we
were
what
when
where
whether
which
while
who
whom
why
will
with
within
without
would
you
your
yours
yourself
yourselves
)";

const char kSectionRules[] =
    R"([title]
Patent-title
Invention-title
[abstract]
Abstract
[background_exact]
description of the prior art
background of the invention
background
background information
prior art
introduction to the invention
[background_partial_heading]
.*background.*
.*prior art.*
.*related technology.*
.*related art.*
[background_partial_paragraph]
.*background.*
.*prior art.*
.*related art.*
[summary_exact]
summary of the invention
statement of the invention
general description of the invention
brief description of the invention
short description of the invention
brief description of the present invention
[summary_partial_heading]
.*summary.*
[summary_partial_paragraph]
.*summary.*
.*statement of the invention.*
.*general description of the invention.*
.*brief description of the invention.*
)";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

const std::string& table_s2_text() {
    static const std::string s(kTableS2);
    return s;
}

const std::string& table_s3_text() {
    static const std::string s(kTableS3);
    return s;
}

const std::string& stopwords_text() {
    static const std::string s(kStopwords);
    return s;
}

const std::string& section_rules_text() {
    static const std::string s(kSectionRules);
    return s;
}

const std::array<std::string, 6>& keyword_columns() {
    static const std::array<std::string, 6> cols = {
        "prevent", "undesirable", "requirement", "fail", "disadvantage", "overcome"};
    return cols;
}

std::vector<TableS2Row> table_s2() {
    std::vector<TableS2Row> rows;
    std::istringstream iss(table_s2_text());
    std::string line;
    std::getline(iss, line); // header
    while (std::getline(iss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 13) throw ValidationError("bundled table_s2 row has wrong arity");
        TableS2Row r;
        r.domain_no = std::stoi(f[0]);
        r.domain = f[1];
        r.n_patents = std::stoi(f[2]);
        for (int k = 0; k < kNumKeywords; ++k) r.counts[k] = std::stol(f[3 + k]);
        r.six_kw_total = std::stol(f[9]);
        r.word_total = std::stol(f[10]);
        r.kw_published = std::stoi(f[11]);
        r.k_percent = std::stod(f[12]);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace patmine::bundled
