# Job orchestration and verification reports for the command line
