"""mockboard: a self-contained LAN mock board examination service.

Admins author weighted, timed, multiple-choice subject exams per degree
program; verified examinees take randomized exams under server-enforced
deadlines and receive graded results and printable certificates
immediately.
"""

__version__ = "0.1.0"
