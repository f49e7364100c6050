# config and CSV file helpers
