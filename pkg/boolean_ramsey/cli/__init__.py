from boolean_ramsey.cli.table import TableCell, cmd_table
