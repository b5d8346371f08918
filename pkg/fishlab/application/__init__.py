"""Operations shared by the command-line front end."""
